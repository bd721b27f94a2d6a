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

#ifndef MOMREC_MOMENTS_HPP
#define MOMREC_MOMENTS_HPP

#include <vector>

#include "momrec/domain.hpp"
#include "momrec/precision.hpp"

namespace momrec {

/// Hermitian table of complex area moments mu_{kj} = <z^k, z^j> for
/// 0 <= k, j <= degree. Values are immutable once built; construction
/// enforces Hermitian symmetry by conjugate averaging and records the
/// pre-averaging deviation as a diagnostic.
class MomentMatrix {
 public:
  MomentMatrix(int degree, mpfr_prec_t prec);

  int degree() const { return degree_; }
  mpfr_prec_t prec() const { return prec_; }

  /// Throws DegreeExceedsMoments outside [0, degree]^2.
  const Complex& at(int k, int j) const;
  Complex& at_mut(int k, int j);

  /// Conjugate averaging of (k,j)/(j,k) pairs; stores the max deviation.
  void enforce_hermitian();
  const Real& hermitian_deviation() const { return herm_dev_; }

  Real max_abs() const;

  /// Cholesky-style factorization check: every pivot must stay above
  /// -tol. Throws MomentsNotPositiveDefinite otherwise.
  void assert_positive_semidefinite(const Real& tol) const;

 private:
  int degree_;
  mpfr_prec_t prec_;
  std::vector<Complex> data_;  // (degree+1)^2 row-major
  Real herm_dev_;
};

/// Real moments tau_{mn} = integral of x^m y^n over the domain.
/// Two accepted layouts: triangular (all m+n <= order) and rectangular
/// (all m, n <= order).
struct RealMomentArray {
  enum class Layout { Triangular, Rectangular };

  Layout layout;
  int order;
  std::vector<Real> vals;

  RealMomentArray(Layout lay, int ord, mpfr_prec_t prec);

  bool contains(int m, int n) const;
  /// Throws IncompleteRealMoments when (m,n) lies outside the layout.
  const Real& at(int m, int n) const;
  Real& at_mut(int m, int n);
  mpfr_prec_t prec() const;

 private:
  int index(int m, int n) const;
};

/// Exact polygon moments via the boundary reduction
///   mu_{kj} = (1/(2i(j+1))) * contour integral of z^k conj(z)^{j+1} dz,
/// each straight edge integrated with a Gauss-Legendre rule of enough
/// points to be exact for the polynomial integrand.
MomentMatrix polygon_moments(const DomainSpec& spec, int N,
                             const PrecisionContext& ctx, int workers = 1);

/// Contour-quadrature moments. Smooth boundaries (laurent or named smooth
/// shapes) use the equispaced trapezoid rule in theta on z = Psi(e^{i
/// theta}), spectrally accurate for analytic boundaries; `nodes` is the
/// total node count and must be >= 4(N+2). Polygonal boundaries are traced
/// piecewise-linearly with a Clenshaw-Curtis rule per edge; `nodes` is the
/// per-edge node count with the same lower bound.
MomentMatrix parametric_moments(const DomainSpec& spec, int N, long nodes,
                                const PrecisionContext& ctx, int workers = 1);

/// Default node count for parametric_moments.
long default_quadrature_nodes(int N);

/// Complex moments from real moments:
///   mu_{mn} = sum_j sum_k C(m,j) C(n,k) i^{m-j} (-i)^{n-k}
///             tau_{j+k, m+n-j-k}.
/// Throws IncompleteRealMoments when tau does not cover degree N.
MomentMatrix real_to_complex(const RealMomentArray& tau, int N);
/// Largest complex degree obtainable from the given layout.
int max_complex_degree(const RealMomentArray& tau);
MomentMatrix real_to_complex(const RealMomentArray& tau);

/// Real moments from complex moments (triangular output, m+n <= degree):
///   tau_{mn} = (-i)^n 2^{-m-n} sum_j sum_k (-1)^{n-k} C(m,j) C(n,k)
///              mu_{j+k, m+n-j-k}.
/// Requires mu Hermitian to tolerance; throws NonHermitianInput.
RealMomentArray complex_to_real(const MomentMatrix& mu);

}  // namespace momrec

#endif  // MOMREC_MOMENTS_HPP
