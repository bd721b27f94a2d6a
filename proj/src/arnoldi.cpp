// Copyright 2026 The momrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "momrec/arnoldi.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace momrec {

HessenbergMatrix::HessenbergMatrix(int order, mpfr_prec_t prec)
    : order_(order), prec_(prec), zero_(prec) {
  if (order < 0) throw IndexOutOfRange("Hessenberg order must be >= 0");
  cols_.reserve(order + 1);
  for (int j = 0; j <= order; ++j)
    cols_.emplace_back(static_cast<size_t>(j) + 2, Complex(prec));
}

const Complex& HessenbergMatrix::at(int k, int j) const {
  if (j < 0 || j > order_ || k < 0)
    throw IndexOutOfRange("Hessenberg entry (" + std::to_string(k) + "," +
                          std::to_string(j) + ") outside order " +
                          std::to_string(order_));
  if (k > j + 1) return zero_;
  return cols_[j][k];
}

Complex& HessenbergMatrix::at_mut(int k, int j) {
  if (j < 0 || j > order_ || k < 0 || k > j + 1)
    throw IndexOutOfRange("Hessenberg entry (" + std::to_string(k) + "," +
                          std::to_string(j) + ") is structural");
  return cols_[j][k];
}

const std::vector<Complex>& HessenbergMatrix::column(int j) const {
  if (j < 0 || j > order_)
    throw IndexOutOfRange("Hessenberg column " + std::to_string(j));
  return cols_[j];
}

namespace {

// h[b] = sum_a v_a mu_{a,b}, so that <v, q> = sum_b h[b] conj(q_b).
void moment_vector(const ComplexPolynomial& v, const MomentMatrix& M,
                   std::vector<Complex>& h, Real& t) {
  int deg = v.degree();
  h.assign(static_cast<size_t>(deg) + 1, Complex(M.prec()));
  for (int b = 0; b <= deg; ++b) {
    Complex& acc = h[b];
    for (int a = 0; a <= deg; ++a)
      if (!v.coeffs[a].is_zero()) acc_addmul(acc, v.coeffs[a], M.at(a, b), t);
  }
}

Complex dot_against(const std::vector<Complex>& h, const ComplexPolynomial& q,
                    mpfr_prec_t prec, Real& t) {
  Complex acc(prec);
  size_t n = std::min(h.size(), q.coeffs.size());
  for (size_t b = 0; b < n; ++b) acc_addmul_conj(acc, h[b], q.coeffs[b], t);
  return acc;
}

// Crude boundary-radius estimate from the diagonal moment growth,
// used only by the precision budget heuristic.
double estimate_diameter(const MomentMatrix& M) {
  double mu0 = M.at(0, 0).re.to_double();
  if (!(mu0 > 0)) return 2.0;
  double r = 1.0;
  for (int k = 1; k <= M.degree(); ++k) {
    double q = M.at(k, k).re.to_double() / mu0;
    if (q > 0) r = std::max(r, std::pow(q, 1.0 / (2.0 * k)));
  }
  return 2.0 * r;
}

}  // namespace

std::pair<OrthonormalBasis, HessenbergMatrix> arnoldi_orthonormalize(
    const MomentMatrix& M, int n, const ArnoldiOptions& opts) {
  if (n < 0) throw IndexOutOfRange("arnoldi order must be >= 0");
  if (M.degree() < n + 1)
    throw DegreeExceedsMoments("order " + std::to_string(n) +
                               " needs moments to degree " +
                               std::to_string(n + 1) + ", table has " +
                               std::to_string(M.degree()));
  mpfr_prec_t prec = M.prec();

  // Heuristic budget for monomial-coefficient growth.
  double need = 53.0 + 2.0 * n * std::log2(estimate_diameter(M) + 2.0);
  if (static_cast<double>(prec) < need) {
    if (opts.strict_precision)
      throw PrecisionTooLow("have " + std::to_string(prec) +
                            " bits, heuristic budget asks for " +
                            std::to_string(static_cast<long>(need)));
    if (!opts.quiet)
      std::fprintf(stderr,
                   "momrec: warning: %ld-bit precision is below the "
                   "conservative budget of %ld bits for order %d\n",
                   static_cast<long>(prec), static_cast<long>(need), n);
  }

  OrthonormalBasis basis;
  HessenbergMatrix H(n, prec);
  const Real& mu00 = M.at(0, 0).re;
  if (mu00.sign() <= 0)
    throw MomentsNotPositiveDefinite("mu_00 must be positive");

  Real lambda0 = Real::of_si(1, prec) / Real::sqrt(mu00);
  basis.polys.push_back(ComplexPolynomial::constant(Complex::from_real(lambda0)));
  basis.lambdas.push_back(lambda0);

  std::vector<Complex> h;
  Real t(prec);
  Real degenerate_floor = Real::pow2(-(static_cast<long>(prec) - 16), prec);

  for (int k = 1; k <= n + 1; ++k) {
    ComplexPolynomial v = multiply_by_z(basis.polys[k - 1]);
    moment_vector(v, M, h, t);
    Real v_norm2 = dot_against(h, v, prec, t).re;

    std::vector<Complex> proj(k, Complex(prec));
    for (int j = 0; j < k; ++j) proj[j] = dot_against(h, basis.polys[j], prec, t);

    ComplexPolynomial r = v;
    for (int j = 0; j < k; ++j) sub_scaled(r, proj[j], basis.polys[j]);

    // One correction pass: project the residual again and fold the
    // corrections into the recorded column.
    moment_vector(r, M, h, t);
    for (int j = 0; j < k; ++j) {
      Complex d = dot_against(h, basis.polys[j], prec, t);
      sub_scaled(r, d, basis.polys[j]);
      proj[j] += d;
    }

    // Residual norm re-evaluated from the moment bilinear form.
    moment_vector(r, M, h, t);
    Real r_norm2 = dot_against(h, r, prec, t).re;
    if (r_norm2.sign() <= 0 || r_norm2 <= v_norm2 * degenerate_floor)
      throw MomentsNotPositiveDefinite(
          "residual norm collapsed at step " + std::to_string(k) +
          " (moments degenerate or inconsistent)");
    Real sub = Real::sqrt(r_norm2);

    int col = k - 1;
    for (int j = 0; j < k; ++j) H.at_mut(j, col) = proj[j];
    H.at_mut(k, col) = Complex::from_real(sub);

    if (k <= n) {
      Real inv = Real::of_si(1, prec) / sub;
      ComplexPolynomial pk = scaled(r, inv);
      basis.lambdas.push_back(basis.lambdas[k - 1] * inv);
      basis.polys.push_back(std::move(pk));
    }
  }
  return {std::move(basis), std::move(H)};
}

std::vector<Real> leading_coefficients(const OrthonormalBasis& basis) {
  return basis.lambdas;
}

ScaledDiagonals scaled_diagonals(const HessenbergMatrix& H, int n, int m) {
  if (n < 0 || H.order() < n)
    throw IndexOutOfRange("scaled diagonals need Hessenberg columns 0.." +
                          std::to_string(n));
  if (!(1 < m && m < n))
    throw IndexOutOfRange("m must satisfy 1 < m < n");
  mpfr_prec_t prec = H.prec();
  ScaledDiagonals out{Real(prec), {}};
  Real np1 = Real::of_si(n + 1, prec);
  out.b_est =
      Real::sqrt(Real::of_si(n + 2, prec) / np1) * H.at(n + 1, n).re;
  out.coeff_est.reserve(m + 1);
  for (int k = 0; k <= m; ++k) {
    Real factor = Real::sqrt(Real::of_si(n - k + 1, prec) / np1);
    out.coeff_est.push_back(H.at(n - k, n) * factor);
  }
  return out;
}

}  // namespace momrec
