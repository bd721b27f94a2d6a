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

#include "momrec/faber.hpp"

#include <string>
#include <utility>

namespace momrec {

FaberSequence faber_second_kind(const LaurentMap& map, int n) {
  if (n < 0) throw IndexOutOfRange("faber sequence length must be >= 0");
  mpfr_prec_t prec = map.prec();
  FaberSequence seq;
  seq.truncated = map.order() < n;
  seq.polys.reserve(n + 1);

  // G_0 is the constant gamma = 1/b: the recurrence preserves the leading
  // coefficient law lead(G_k) = b^{-(k+1)} only with this seed.
  Real inv_b = Real::of_si(1, prec) / map.b;
  seq.polys.push_back(ComplexPolynomial::constant(Complex::from_real(inv_b)));

  for (int k = 0; k < n; ++k) {
    ComplexPolynomial next = multiply_by_z(seq.polys[k]);
    for (int j = 0; j <= k; ++j) {
      if (j > map.order()) break;  // missing coefficients are exact zeros
      sub_scaled(next, map.coeffs[j], seq.polys[k - j]);
    }
    for (Complex& c : next.coeffs) c *= inv_b;
    seq.polys.push_back(std::move(next));
  }
  return seq;
}

HessenbergMatrix toeplitz_matrix(const LaurentMap& map, int n) {
  if (n < 0) throw IndexOutOfRange("toeplitz order must be >= 0");
  mpfr_prec_t prec = map.prec();
  HessenbergMatrix T(n, prec);
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= j; ++k) {
      int d = j - k;
      if (d <= map.order()) T.at_mut(k, j) = map.coeffs[d];
    }
    T.at_mut(j + 1, j) = Complex::from_real(map.b);
  }
  return T;
}

Real triangle_capacity(mpfr_prec_t prec) {
  // (3/2) Gamma(1/3)^3 / (4 pi^2) for the unit-circumradius equilateral
  // triangle, stored to the 12 digits used throughout validation.
  return Real::parse("0.730499243103", prec);
}

LaurentMap triangle_coefficients(int m_max, const PrecisionContext& ctx) {
  if (m_max < 0) throw IndexOutOfRange("m_max must be >= 0");
  mpfr_prec_t prec = ctx.bits;
  Real cap = triangle_capacity(prec);
  std::vector<Complex> coeffs(static_cast<size_t>(m_max) + 1, Complex(prec));
  // Nonzero only at n = 3m-1: c_n = cap * (-1)^{m+1} binom(2/3, m) / n,
  // binom(2/3, m) = prod_{i=0..m-1} (2/3 - i) / m!.
  Real binom = Real::of_si(1, prec);
  Real two_thirds = Real::of_ratio(2, 3, prec);
  for (int m = 1; 3 * m - 1 <= m_max; ++m) {
    binom *= (two_thirds - Real::of_si(m - 1, prec)) / Real::of_si(m, prec);
    Real value = cap * binom / Real::of_si(3 * m - 1, prec);
    if (m % 2 == 0) value = -value;  // (-1)^{m+1}
    coeffs[3 * m - 1] = Complex::from_real(value);
  }
  return LaurentMap(std::move(cap), std::move(coeffs));
}

}  // namespace momrec
