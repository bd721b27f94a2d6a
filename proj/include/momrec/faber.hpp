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

#ifndef MOMREC_FABER_HPP
#define MOMREC_FABER_HPP

#include "momrec/arnoldi.hpp"
#include "momrec/laurent.hpp"
#include "momrec/polynomial.hpp"
#include "momrec/precision.hpp"

namespace momrec {

/// Second-kind Faber polynomials G_0..G_n of the map's image curve.
/// deg(G_k) = k and the leading coefficient is gamma^{k+1} = b^{-(k+1)}.
struct FaberSequence {
  std::vector<ComplexPolynomial> polys;
  /// Set when the map's truncation order was below the requested n and
  /// missing coefficients were taken as exact zeros.
  bool truncated = false;
};

/// Runs the recurrence  z G_k = b G_{k+1} + sum_{j=0..k} c_j G_{k-j}
/// upward from G_0 = 1/b.
FaberSequence faber_second_kind(const LaurentMap& map, int n);

/// Toeplitz symbol matrix of the map: entry (k,j) = c_{j-k} for j >= k,
/// = b on the first subdiagonal, 0 below. Returned with columns 0..n so
/// the (n+1)x(n+1) principal block is available.
HessenbergMatrix toeplitz_matrix(const LaurentMap& map, int n);

/// Exact exterior map of the equilateral triangle with vertices at
/// 1, e^{2 pi i/3}, e^{4 pi i/3}: capacity (3/2) Gamma(1/3)^3 / (4 pi^2),
/// stored as its 12-digit decimal value, and coefficients
///   c_n = cap * (-1)^{m+1} binom(2/3, m) / n   for n = 3m-1,
///   c_n = 0 otherwise,
/// with the generalized binomial computed by the falling-factorial
/// product. Coefficients are produced through index m_max.
LaurentMap triangle_coefficients(int m_max, const PrecisionContext& ctx);

/// 12-digit capacity of the triangle above, as a Real.
Real triangle_capacity(mpfr_prec_t prec);

}  // namespace momrec

#endif  // MOMREC_FABER_HPP
