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

#include "momrec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace momrec {

namespace {

// Dense square complex matrix, row-major.
struct Dense {
  int n;
  mpfr_prec_t prec;
  std::vector<Complex> a;

  Dense(int order, mpfr_prec_t p) : n(order), prec(p) {
    a.assign(static_cast<size_t>(order) * order, Complex(p));
  }
  Complex& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  const Complex& at(int r, int c) const {
    return a[static_cast<size_t>(r) * n + c];
  }
};

// Parlett-Reinsch balancing restricted to powers of two, preserving
// Hessenberg structure (it is a diagonal similarity).
void balance(Dense& h) {
  int n = h.n;
  mpfr_prec_t p = h.prec;
  bool converged = false;
  int sweeps = 0;
  while (!converged && sweeps++ < 32) {
    converged = true;
    for (int i = 0; i < n; ++i) {
      Real row(p), col(p);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        row += h.at(i, j).abs();
        col += h.at(j, i).abs();
      }
      if (row.is_zero() || col.is_zero()) continue;
      long e_col = mpfr_get_exp(col.raw());
      long e_row = mpfr_get_exp(row.raw());
      long shift = (e_row - e_col) / 2;
      if (shift == 0) continue;
      // scale column i by 2^shift, row i by 2^-shift
      converged = false;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        h.at(j, i).re.scale2(shift);
        h.at(j, i).im.scale2(shift);
        h.at(i, j).re.scale2(-shift);
        h.at(i, j).im.scale2(-shift);
      }
    }
  }
}

// Complex Givens rotation: returns (c real, s complex) with
//   [ c       s ] [x]   [r]
//   [-conj(s) c ] [y] = [0].
void givens(const Complex& x, const Complex& y, Real& c, Complex& s,
            mpfr_prec_t p) {
  Real xn = x.abs();
  Real yn = y.abs();
  if (yn.is_zero()) {
    c = Real::of_si(1, p);
    s.set_zero();
    return;
  }
  Real r = Real::hypot(xn, yn);
  c = xn / r;
  if (xn.is_zero()) {
    // x = 0: rotate by the phase of conj(y)
    Complex u = y.conj();
    s = u;
    s /= yn;
    return;
  }
  // s = (x/|x|) * conj(y) / r
  Complex phase = x;
  phase /= xn;
  s = phase * y.conj();
  s /= r;
}

// Eigenvalues of the trailing 2x2 of the active block; returns the one
// closer to the bottom-right entry (Wilkinson shift).
Complex wilkinson_shift(const Dense& h, int lo, int hi) {
  mpfr_prec_t p = h.prec;
  const Complex& a = h.at(hi - 1, hi - 1);
  const Complex& b = h.at(hi - 1, hi);
  const Complex& c = h.at(hi, hi - 1);
  const Complex& d = h.at(hi, hi);
  (void)lo;
  Real half = Real::of_ratio(1, 2, p);
  Complex tr_half = (a + d) * half;
  Complex diff_half = (a - d) * half;
  Complex disc = Complex::sqrt(diff_half * diff_half + b * c);
  Complex e1 = tr_half + disc;
  Complex e2 = tr_half - disc;
  return ((e1 - d).abs() <= (e2 - d).abs()) ? e1 : e2;
}

// One explicit single-shift QR sweep on the active block [lo, hi]:
// H - sigma I = QR, H <- RQ + sigma I, via Givens rotations.
void qr_sweep(Dense& h, int lo, int hi, const Complex& sigma) {
  mpfr_prec_t p = h.prec;
  int m = hi - lo + 1;
  if (m < 2) return;
  std::vector<Real> cs;
  std::vector<Complex> ss;
  cs.reserve(m - 1);
  ss.reserve(m - 1);
  for (int i = lo; i <= hi; ++i) h.at(i, i) -= sigma;

  Real t(p);
  for (int k = lo; k < hi; ++k) {
    Real c(p);
    Complex s(p);
    givens(h.at(k, k), h.at(k + 1, k), c, s, p);
    cs.push_back(c);
    ss.push_back(s);
    // apply to rows k, k+1 over columns k..hi
    for (int j = k; j <= hi; ++j) {
      Complex x = h.at(k, j);
      Complex y = h.at(k + 1, j);
      Complex nx = x * c;
      acc_addmul(nx, s, y, t);
      Complex ny = y * c;
      acc_submul(ny, s.conj(), x, t);
      h.at(k, j) = nx;
      h.at(k + 1, j) = ny;
    }
  }
  // H <- R Q: apply conjugated rotations on the right
  for (int k = lo; k < hi; ++k) {
    const Real& c = cs[k - lo];
    const Complex& s = ss[k - lo];
    int top = std::min(k + 1, hi - 1);
    for (int i = lo; i <= top + 1 && i <= hi; ++i) {
      Complex x = h.at(i, k);
      Complex y = h.at(i, k + 1);
      Complex nx = x * c;
      acc_addmul(nx, y, s.conj(), t);
      Complex ny = y * c;
      acc_submul(ny, x, s, t);
      h.at(i, k) = nx;
      h.at(i, k + 1) = ny;
    }
  }
  for (int i = lo; i <= hi; ++i) h.at(i, i) += sigma;
}

Spectrum qr_eigenvalues(Dense h) {
  int n = h.n;
  mpfr_prec_t p = h.prec;
  Spectrum spec(p);
  spec.values.assign(n, Complex(p));
  if (n == 0) return spec;
  balance(h);

  Real eps = Real::pow2(-(static_cast<long>(p) - 8), p);
  Real norm_scale(p);
  for (int i = 0; i < n; ++i)
    for (int j = std::max(0, i - 1); j < n; ++j)
      norm_scale = Real::max(norm_scale, h.at(i, j).abs());

  long budget = 40L * n;
  long sweeps = 0;
  int hi = n - 1;
  int stagnation = 0;
  while (hi >= 0) {
    // Deflate converged subdiagonals from the bottom.
    bool deflated = true;
    while (deflated && hi > 0) {
      deflated = false;
      Real gap = (h.at(hi - 1, hi - 1).abs() + h.at(hi, hi).abs());
      Real thresh = eps * gap;
      if (gap.is_zero()) thresh = eps * norm_scale;
      if (h.at(hi, hi - 1).abs() <= thresh) {
        spec.residual = Real::max(spec.residual, h.at(hi, hi - 1).abs());
        spec.values[hi] = h.at(hi, hi);
        --hi;
        deflated = true;
        stagnation = 0;
      }
    }
    if (hi == 0) {
      spec.values[0] = h.at(0, 0);
      break;
    }
    // Find the active block [lo, hi]: scan up to a negligible subdiagonal.
    int lo = hi;
    while (lo > 0) {
      Real gap = (h.at(lo - 1, lo - 1).abs() + h.at(lo, lo).abs());
      Real thresh = eps * gap;
      if (gap.is_zero()) thresh = eps * norm_scale;
      if (h.at(lo, lo - 1).abs() <= thresh) break;
      --lo;
    }
    if (++sweeps > budget)
      throw NoConvergence("QR did not converge within 40 n sweeps (n = " +
                          std::to_string(n) + ")");
    Complex sigma(p);
    if (++stagnation % 12 == 0) {
      // Exceptional shift to break symmetric stalls.
      sigma = h.at(hi, hi - 1);
      sigma.re = sigma.abs();
      mpfr_set_zero(sigma.im.raw(), 1);
      if (hi - 1 > lo) sigma.re += h.at(hi - 1, hi - 2).abs();
    } else {
      sigma = wilkinson_shift(h, lo, hi);
    }
    qr_sweep(h, lo, hi, sigma);
  }
  return spec;
}

}  // namespace

Spectrum hessenberg_eigenvalues(const HessenbergMatrix& H, int n) {
  if (n < 1 || n > H.order() + 1)
    throw IndexOutOfRange("principal submatrix order " + std::to_string(n) +
                          " outside 1.." + std::to_string(H.order() + 1));
  Dense d(n, H.prec());
  for (int j = 0; j < n; ++j)
    for (int k = 0; k <= std::min(j + 1, n - 1); ++k) d.at(k, j) = H.at(k, j);
  return qr_eigenvalues(std::move(d));
}

Spectrum polynomial_zeros_oracle(const ComplexPolynomial& p) {
  int deg = p.degree();
  if (deg < 1)
    throw IndexOutOfRange("zeros need a polynomial of degree >= 1");
  mpfr_prec_t prec = p.prec();
  const Complex& lead = p.coeffs[deg];
  Dense d(deg, prec);
  Complex one(prec);
  mpfr_set_ui(one.re.raw(), 1, MPFR_RNDN);
  for (int i = 1; i < deg; ++i) d.at(i, i - 1) = one;
  for (int i = 0; i < deg; ++i) {
    Complex ci = p.coeffs[i] / lead;
    d.at(i, deg - 1) = -ci;
  }
  return qr_eigenvalues(std::move(d));
}

Real max_pairing_distance(const Spectrum& a, const Spectrum& b) {
  size_t n = a.values.size();
  if (n != b.values.size())
    throw IndexOutOfRange("spectra of different lengths cannot be matched");
  mpfr_prec_t p = std::max(a.residual.prec(), b.residual.prec());
  if (n == 0) return Real(p);

  // Hungarian algorithm (Jonker-Volgenant style potentials) on the
  // pairwise-distance matrix, run in double; the winning assignment's
  // distances are then re-measured in full precision.
  std::vector<std::vector<double>> w(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      w[i][j] = (a.values[i] - b.values[j]).abs().to_double();

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, -1), way(n + 1, 0);
  for (size_t i = 1; i <= n; ++i) {
    match[0] = static_cast<int>(i);
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = match[j0], j1 = -1;
      double delta = inf;
      for (size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = w[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = static_cast<int>(j);
        }
      }
      for (size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != -1);
    do {
      int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }

  Real worst(p);
  for (size_t j = 1; j <= n; ++j) {
    int i = match[j];
    worst = Real::max(worst, (a.values[i - 1] - b.values[j - 1]).abs());
  }
  return worst;
}

}  // namespace momrec
