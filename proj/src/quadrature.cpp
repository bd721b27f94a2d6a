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

#include "momrec/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace momrec {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
void legendre_pair(int n, const Real& x, Real& pn, Real& dpn) {
  mpfr_prec_t p = x.prec();
  Real p0 = Real::of_si(1, p);
  Real p1 = x;
  Real tmp(p);
  for (int k = 2; k <= n; ++k) {
    // p_k = ((2k-1) x p_{k-1} - (k-1) p_{k-2}) / k
    tmp = x * p1;
    tmp *= Real::of_si(2 * k - 1, p);
    tmp -= Real::of_si(k - 1, p) * p0;
    tmp /= Real::of_si(k, p);
    p0 = p1;
    p1 = tmp;
  }
  pn = p1;
  // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
  Real num = x * p1 - p0;
  num *= Real::of_si(n, p);
  Real den = x * x - Real::of_si(1, p);
  dpn = num / den;
}

}  // namespace

QuadratureRule gauss_legendre(int n, mpfr_prec_t prec) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  mpfr_prec_t wp = prec + 32;  // guard bits for the Newton refinement
  QuadratureRule rule;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  Real one = Real::of_si(1, wp);
  Real two = Real::of_si(2, wp);
  for (int i = 0; i < n; ++i) {
    double guess = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    Real x = Real::of(guess, wp);
    Real pn(wp), dpn(wp);
    Real step_bound = Real::pow2(-static_cast<long>(prec) - 8, wp);
    for (int it = 0; it < 64; ++it) {
      legendre_pair(n, x, pn, dpn);
      Real dx = pn / dpn;
      x -= dx;
      if (Real::abs(dx) <= step_bound * Real::abs(x) + step_bound) break;
    }
    legendre_pair(n, x, pn, dpn);
    Real w = two / ((one - x * x) * dpn * dpn);
    Real xo(prec), wo(prec);
    mpfr_set(xo.raw(), x.raw(), MPFR_RNDN);
    mpfr_set(wo.raw(), w.raw(), MPFR_RNDN);
    rule.nodes.push_back(xo);
    rule.weights.push_back(wo);
  }
  return rule;
}

QuadratureRule clenshaw_curtis(int points, mpfr_prec_t prec) {
  if (points < 2) throw std::invalid_argument("clenshaw_curtis: need >= 2 points");
  int n = points - 1;  // panel count in the classic closed rule
  mpfr_prec_t wp = prec + 16;
  QuadratureRule rule;
  rule.nodes.reserve(points);
  rule.weights.reserve(points);
  Real pi = Real::pi(wp);
  Real one = Real::of_si(1, wp);
  for (int j = 0; j <= n; ++j) {
    Real theta = pi * Real::of_si(j, wp) / Real::of_si(n, wp);
    Real x = Real::cos(theta);
    // w_j = (c_j/n) [1 - sum_{k=1}^{n/2} beta_k cos(2 k theta_j)/(4k^2-1)],
    // beta_k = 2 except beta_{n/2} = 1 when n is even; c_j = 2 interior.
    Real alpha = theta + theta;  // 2 theta_j
    Real c1 = Real::cos(alpha);
    Real c_prev = one;  // cos(0)
    Real c_cur = c1;
    Real two_c1 = c1 + c1;
    Real sum(wp);
    int kmax = n / 2;
    for (int k = 1; k <= kmax; ++k) {
      Real beta = (2 * k == n) ? one : Real::of_si(2, wp);
      sum += beta * c_cur / Real::of_si(4 * k * k - 1, wp);
      // Chebyshev step: cos((k+1)a) = 2 cos(a) cos(ka) - cos((k-1)a)
      Real c_next = two_c1 * c_cur - c_prev;
      c_prev = c_cur;
      c_cur = c_next;
    }
    Real w = (one - sum) / Real::of_si(n, wp);
    if (j != 0 && j != n) w += w;
    Real xo(prec), wo(prec);
    mpfr_set(xo.raw(), x.raw(), MPFR_RNDN);
    mpfr_set(wo.raw(), w.raw(), MPFR_RNDN);
    rule.nodes.push_back(xo);
    rule.weights.push_back(wo);
  }
  return rule;
}

}  // namespace momrec
