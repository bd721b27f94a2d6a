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

#ifndef MOMREC_ARNOLDI_HPP
#define MOMREC_ARNOLDI_HPP

#include <utility>
#include <vector>

#include "momrec/moments.hpp"
#include "momrec/polynomial.hpp"

namespace momrec {

/// Area-orthonormal polynomials p_0..p_n with positive leading
/// coefficients lambda_k.
struct OrthonormalBasis {
  std::vector<ComplexPolynomial> polys;
  std::vector<Real> lambdas;
};

/// Upper-Hessenberg representation of multiplication by z in the
/// orthonormal basis: entries h_{k,j} = <z p_j, p_k> stored column-wise,
/// column j covering rows 0..j+1. Entries with k >= j+2 are structural
/// zeros. The first subdiagonal h_{j+1,j} is real positive.
class HessenbergMatrix {
 public:
  HessenbergMatrix(int order, mpfr_prec_t prec);

  int order() const { return order_; }
  mpfr_prec_t prec() const { return prec_; }

  /// Entry (k, j); structural zeros are returned as exact zero.
  /// Throws IndexOutOfRange outside 0 <= j <= order, k >= 0.
  const Complex& at(int k, int j) const;
  Complex& at_mut(int k, int j);

  /// Columns are exposed for file output.
  const std::vector<Complex>& column(int j) const;

 private:
  int order_;
  mpfr_prec_t prec_;
  std::vector<std::vector<Complex>> cols_;  // cols_[j] has j+2 rows
  Complex zero_;
};

struct ArnoldiOptions {
  /// Refuse to run instead of warning when the precision budget heuristic
  /// is violated.
  bool strict_precision = false;
  /// Warnings go to stderr when false-positive precision risk detected.
  bool quiet = false;
};

/// Arnoldi Gram-Schmidt over the moment inner product. Step k
/// orthonormalizes {p_0, .., p_{k-1}, z p_{k-1}}; classical projections
/// are followed by exactly one re-orthogonalization pass. Produces
/// p_0..p_n and the Hessenberg columns 0..n (the last column comes from
/// orthogonalizing z p_n, so h_{n+1,n} is included).
/// Requires moments to degree n+1.
std::pair<OrthonormalBasis, HessenbergMatrix> arnoldi_orthonormalize(
    const MomentMatrix& M, int n, const ArnoldiOptions& opts = {});

/// lambda_0..lambda_n. Contract: lambda_k / lambda_{k+1} equals the
/// Hessenberg subdiagonal h_{k+1,k} to tolerance.
std::vector<Real> leading_coefficients(const OrthonormalBasis& basis);

/// Scaled-diagonal read-off of the Laurent data:
///   b^{(n)}   = sqrt((n+2)/(n+1)) h_{n+1,n}
///   b_k^{(n)} = sqrt((n-k+1)/(n+1)) h_{n-k,n},  k = 0..m.
struct ScaledDiagonals {
  Real b_est;
  std::vector<Complex> coeff_est;  // b_0^{(n)} .. b_m^{(n)}
};
ScaledDiagonals scaled_diagonals(const HessenbergMatrix& H, int n, int m);

}  // namespace momrec

#endif  // MOMREC_ARNOLDI_HPP
