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

#include "momrec/moments.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <thread>
#include <utility>

#include "momrec/quadrature.hpp"

namespace momrec {

namespace {

// Static block partition; every item is computed wholly by one worker in
// a fixed order, so output is identical for any worker count.
void parallel_for(long count, int workers, const std::function<void(long)>& fn);

}  // namespace

MomentMatrix::MomentMatrix(int degree, mpfr_prec_t prec)
    : degree_(degree), prec_(prec), herm_dev_(prec) {
  if (degree < 0) throw DegreeExceedsMoments("degree must be >= 0");
  data_.assign(static_cast<size_t>(degree + 1) * (degree + 1), Complex(prec));
}

const Complex& MomentMatrix::at(int k, int j) const {
  if (k < 0 || j < 0 || k > degree_ || j > degree_)
    throw DegreeExceedsMoments("mu_{" + std::to_string(k) + "," +
                               std::to_string(j) + "} beyond degree " +
                               std::to_string(degree_));
  return data_[static_cast<size_t>(k) * (degree_ + 1) + j];
}

Complex& MomentMatrix::at_mut(int k, int j) {
  return const_cast<Complex&>(static_cast<const MomentMatrix*>(this)->at(k, j));
}

void MomentMatrix::enforce_hermitian() {
  Real dev(prec_);
  Real half = Real::of_ratio(1, 2, prec_);
  for (int k = 0; k <= degree_; ++k) {
    for (int j = k; j <= degree_; ++j) {
      Complex& upper = at_mut(k, j);
      Complex& lower = at_mut(j, k);
      Complex diff = upper - lower.conj();
      dev = Real::max(dev, diff.abs());
      Complex avg = (upper + lower.conj()) * half;
      upper = avg;
      lower = avg.conj();
    }
    // Diagonal entries become real by the averaging above; pin the
    // imaginary part to an exact zero.
    mpfr_set_zero(at_mut(k, k).im.raw(), 1);
  }
  herm_dev_ = dev;
}

Real MomentMatrix::max_abs() const {
  Real best(prec_);
  for (const Complex& c : data_) best = Real::max(best, c.abs());
  return best;
}

void MomentMatrix::assert_positive_semidefinite(const Real& tol) const {
  // In-place complex Cholesky on a scratch copy; pivots must stay > -tol.
  int n = degree_ + 1;
  std::vector<Complex> a(data_);
  Real t(prec_);
  auto idx = [n](int r, int c) { return static_cast<size_t>(r) * n + c; };
  for (int k = 0; k < n; ++k) {
    Real pivot = a[idx(k, k)].re;
    for (int j = 0; j < k; ++j) pivot -= a[idx(k, j)].norm2();
    if (pivot < -tol)
      throw MomentsNotPositiveDefinite(
          "Cholesky pivot " + std::to_string(k) + " = " + pivot.str(6) +
          " below -tol = " + (-tol).str(6));
    if (pivot.sign() <= 0) {
      // Semidefinite within tolerance: the trailing block must stay small;
      // treat the rest of this column as zero.
      for (int i = k; i < n; ++i) a[idx(i, k)].set_zero();
      continue;
    }
    Real d = Real::sqrt(pivot);
    a[idx(k, k)] = Complex::from_real(d);
    for (int i = k + 1; i < n; ++i) {
      Complex s = a[idx(i, k)];
      for (int j = 0; j < k; ++j)
        acc_submul(s, a[idx(i, j)], a[idx(k, j)].conj(), t);
      s /= d;
      a[idx(i, k)] = s;
    }
  }
}

RealMomentArray::RealMomentArray(Layout lay, int ord, mpfr_prec_t prec)
    : layout(lay), order(ord) {
  size_t count = lay == Layout::Triangular
                     ? static_cast<size_t>(ord + 1) * (ord + 2) / 2
                     : static_cast<size_t>(ord + 1) * (ord + 1);
  vals.assign(count, Real(prec));
}

bool RealMomentArray::contains(int m, int n) const {
  if (m < 0 || n < 0) return false;
  return layout == Layout::Triangular ? (m + n <= order)
                                      : (m <= order && n <= order);
}

int RealMomentArray::index(int m, int n) const {
  if (layout == Layout::Triangular) {
    int s = m + n;
    return s * (s + 1) / 2 + n;
  }
  return m * (order + 1) + n;
}

const Real& RealMomentArray::at(int m, int n) const {
  if (!contains(m, n))
    throw IncompleteRealMoments("tau_{" + std::to_string(m) + "," +
                                std::to_string(n) + "} not covered by layout");
  return vals[index(m, n)];
}

Real& RealMomentArray::at_mut(int m, int n) {
  return const_cast<Real&>(static_cast<const RealMomentArray*>(this)->at(m, n));
}

mpfr_prec_t RealMomentArray::prec() const {
  return vals.empty() ? 53 : vals.front().prec();
}

namespace {

void parallel_for(long count, int workers, const std::function<void(long)>& fn) {
  if (workers < 1) workers = 1;
  if (workers == 1 || count < 2 * workers) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  long chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    long lo = w * chunk;
    long hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (long i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// One quadrature node of the contour form: z, its powers, and the dz
// factor (weight already folded in).
struct ContourData {
  // powers[g][p] = z_g^p for p = 0..N+1
  std::vector<std::vector<Complex>> powers;
  std::vector<Complex> dz;  // w_g * z'(t_g)
};

ContourData tabulate_nodes(const std::vector<Complex>& zs,
                           const std::vector<Complex>& dzs, int N,
                           mpfr_prec_t prec, int workers) {
  ContourData data;
  size_t G = zs.size();
  data.powers.assign(G, {});
  data.dz = dzs;
  parallel_for(static_cast<long>(G), workers, [&](long g) {
    std::vector<Complex> pw;
    pw.reserve(N + 2);
    Complex one(prec);
    mpfr_set_ui(one.re.raw(), 1, MPFR_RNDN);
    pw.push_back(one);
    Real t(prec);
    for (int p = 1; p <= N + 1; ++p) {
      Complex next(prec);
      acc_addmul(next, pw.back(), zs[g], t);
      pw.push_back(next);
    }
    data.powers[g] = std::move(pw);
  });
  return data;
}

// mu_{kj} = (1/(2i(j+1))) * sum_g dz_g * z_g^k * conj(z_g)^{j+1}.
MomentMatrix accumulate_moments(const ContourData& data, int N,
                                mpfr_prec_t prec, int workers) {
  MomentMatrix M(N, prec);
  long entries = static_cast<long>(N + 1) * (N + 1);
  size_t G = data.powers.size();
  parallel_for(entries, workers, [&](long e) {
    int k = static_cast<int>(e / (N + 1));
    int j = static_cast<int>(e % (N + 1));
    Complex sum(prec);
    Complex term(prec);
    Real t(prec);
    for (size_t g = 0; g < G; ++g) {
      term.set_zero();
      acc_addmul_conj(term, data.powers[g][k], data.powers[g][j + 1], t);
      acc_addmul(sum, term, data.dz[g], t);
    }
    // Division by 2i(j+1): (x+iy)/(2i(j+1)) = (y - ix)/(2(j+1)).
    Real den = Real::of_si(2 * (j + 1), prec);
    Complex& out = M.at_mut(k, j);
    out.re = sum.im / den;
    out.im = -(sum.re / den);
  });
  M.enforce_hermitian();
  return M;
}

MomentMatrix polygon_contour_moments(const PolygonSpec& poly, int N,
                                     const QuadratureRule& rule,
                                     const PrecisionContext& ctx, int workers) {
  mpfr_prec_t prec = ctx.bits;
  Real half = Real::of_ratio(1, 2, prec);
  std::vector<Complex> zs, dzs;
  size_t E = poly.vertices.size();
  for (size_t e = 0; e < E; ++e) {
    const Complex& va = poly.vertices[e];
    const Complex& vb = poly.vertices[(e + 1) % E];
    Complex mid = (va + vb) * half;
    Complex hd = (vb - va) * half;  // dz/dx on [-1,1]
    for (size_t g = 0; g < rule.nodes.size(); ++g) {
      Complex z = mid + hd * rule.nodes[g];
      zs.push_back(z);
      dzs.push_back(hd * rule.weights[g]);
    }
  }
  ContourData data = tabulate_nodes(zs, dzs, N, prec, workers);
  return accumulate_moments(data, N, prec, workers);
}

}  // namespace

long default_quadrature_nodes(int N) {
  long n = 8L * (N + 2);
  return n < 256 ? 256 : n;
}

MomentMatrix polygon_moments(const DomainSpec& spec, int N,
                             const PrecisionContext& ctx, int workers) {
  if (N < 0) throw DegreeExceedsMoments("degree must be >= 0");
  DomainSpec r = spec.resolved(ctx);
  if (!r.is_polygon())
    throw InvalidPolygon("polygon_moments requires a polygonal domain, got " +
                         spec.describe());
  // The per-edge integrand z^k conj(z)^{j+1} is a polynomial of degree
  // k+j+1 <= 2N+1 in the edge parameter; N+2 Gauss points integrate it
  // exactly.
  QuadratureRule rule = gauss_legendre(N + 2, ctx.bits);
  return polygon_contour_moments(r.as_polygon(), N, rule, ctx, workers);
}

MomentMatrix parametric_moments(const DomainSpec& spec, int N, long nodes,
                                const PrecisionContext& ctx, int workers) {
  if (N < 0) throw DegreeExceedsMoments("degree must be >= 0");
  if (nodes < 4L * (N + 2))
    throw InsufficientNodes("need nodes >= 4(N+2) = " +
                            std::to_string(4L * (N + 2)) + ", got " +
                            std::to_string(nodes));
  DomainSpec r = spec.resolved(ctx);
  mpfr_prec_t prec = ctx.bits;
  if (r.is_polygon()) {
    // Piecewise-linear trace: Clenshaw-Curtis per edge, `nodes` points on
    // each edge, exact for the polynomial edge integrand.
    QuadratureRule rule = clenshaw_curtis(static_cast<int>(nodes), prec);
    return polygon_contour_moments(r.as_polygon(), N, rule, ctx, workers);
  }
  const LaurentMap& map = r.as_laurent();
  validate_jordan_trace(map, 256);
  // Equispaced trapezoid in theta on z = Psi(e^{i theta}):
  //   dz = Psi'(w) i w dtheta, trapezoid weight 2 pi / nodes.
  Real two_pi = Real::pi(prec);
  two_pi.scale2(1);
  Real h = two_pi / Real::of_si(nodes, prec);
  std::vector<Complex> zs(static_cast<size_t>(nodes), Complex(prec));
  std::vector<Complex> dzs(static_cast<size_t>(nodes), Complex(prec));
  parallel_for(nodes, workers, [&](long g) {
    Real theta = two_pi * Real::of_si(g, prec) / Real::of_si(nodes, prec);
    Complex w = Complex::unit(theta);
    Complex z = map.eval(w);
    Complex dpsi = map.eval_derivative(w);
    Complex iw(Complex(-w.im, w.re));  // i*w
    zs[g] = z;
    dzs[g] = dpsi * iw * h;
  });
  ContourData data = tabulate_nodes(zs, dzs, N, prec, workers);
  return accumulate_moments(data, N, prec, workers);
}

namespace {

// Binomial table as Reals at `prec` (values can exceed 2^prec for very
// large arguments; they are only ever used inside rounded sums).
std::vector<std::vector<Real>> binomial_table(int nmax, mpfr_prec_t prec) {
  std::vector<std::vector<Real>> C(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    C[n].assign(n + 1, Real(prec));
    mpfr_set_ui(C[n][0].raw(), 1, MPFR_RNDN);
    mpfr_set_ui(C[n][n].raw(), 1, MPFR_RNDN);
    for (int k = 1; k < n; ++k) C[n][k] = C[n - 1][k - 1] + C[n - 1][k];
  }
  return C;
}

// i^r for r mod 4 applied to a real factor: returns (re, im) selector.
// quadrant 0: (+1, 0), 1: (0, +1), 2: (-1, 0), 3: (0, -1).
void add_power_of_i(Complex& acc, const Real& value, int quadrant) {
  switch (((quadrant % 4) + 4) % 4) {
    case 0: acc.re += value; break;
    case 1: acc.im += value; break;
    case 2: acc.re -= value; break;
    case 3: acc.im -= value; break;
  }
}

}  // namespace

int max_complex_degree(const RealMomentArray& tau) {
  return tau.order / 2;
}

MomentMatrix real_to_complex(const RealMomentArray& tau, int N) {
  mpfr_prec_t prec = tau.prec();
  // mu_{mn} needs tau_{j+k, m+n-j-k} for all 0<=j<=m, 0<=k<=n.
  for (int s = 0; s <= 2 * N; ++s)
    for (int a = 0; a <= s; ++a)
      if (!tau.contains(a, s - a))
        throw IncompleteRealMoments("tau does not cover complex degree " +
                                    std::to_string(N));
  auto C = binomial_table(2 * N + 1, prec);
  MomentMatrix mu(N, prec);
  for (int m = 0; m <= N; ++m) {
    for (int n = 0; n <= N; ++n) {
      Complex acc(prec);
      for (int j = 0; j <= m; ++j) {
        for (int k = 0; k <= n; ++k) {
          // i^{m-j} (-i)^{n-k} = i^{(m-j) - (n-k)}
          int quadrant = (m - j) - (n - k);
          Real term = C[m][j] * C[n][k] * tau.at(j + k, m + n - j - k);
          add_power_of_i(acc, term, quadrant);
        }
      }
      mu.at_mut(m, n) = acc;
    }
  }
  mu.enforce_hermitian();
  return mu;
}

MomentMatrix real_to_complex(const RealMomentArray& tau) {
  return real_to_complex(tau, max_complex_degree(tau));
}

RealMomentArray complex_to_real(const MomentMatrix& mu) {
  mpfr_prec_t prec = mu.prec();
  int N = mu.degree();
  Real scale = mu.max_abs();
  Real tol = Real::pow2(-static_cast<long>(prec) / 2, prec) *
             Real::max(scale, Real::of_si(1, prec));
  for (int k = 0; k <= N; ++k)
    for (int j = k; j <= N; ++j)
      if ((mu.at(k, j) - mu.at(j, k).conj()).abs() > tol)
        throw NonHermitianInput("deviation at (" + std::to_string(k) + "," +
                                std::to_string(j) + ") exceeds tolerance");
  auto C = binomial_table(N + 1, prec);
  RealMomentArray tau(RealMomentArray::Layout::Triangular, N, prec);
  for (int m = 0; m <= N; ++m) {
    for (int n = 0; m + n <= N; ++n) {
      Complex acc(prec);
      for (int j = 0; j <= m; ++j) {
        for (int k = 0; k <= n; ++k) {
          Real f = C[m][j] * C[n][k];
          if ((n - k) % 2 != 0) f = -f;
          const Complex& m_entry = mu.at(j + k, m + n - j - k);
          acc.re += f * m_entry.re;
          acc.im += f * m_entry.im;
        }
      }
      // multiply by (-i)^n 2^{-m-n}; the result must be real to rounding.
      Complex rotated(prec);
      add_power_of_i(rotated, acc.re, -n);
      add_power_of_i(rotated, acc.im, -n + 1);
      rotated.re.scale2(-(m + n));
      tau.at_mut(m, n) = rotated.re;
    }
  }
  return tau;
}

}  // namespace momrec
