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

#ifndef MOMREC_SPECTRA_HPP
#define MOMREC_SPECTRA_HPP

#include <vector>

#include "momrec/arnoldi.hpp"
#include "momrec/polynomial.hpp"

namespace momrec {

struct Spectrum {
  std::vector<Complex> values;  // with multiplicity, length = matrix order
  Real residual;                // max neglected-subdiagonal backward error

  explicit Spectrum(mpfr_prec_t prec = 53) : residual(prec) {}
};

/// Eigenvalues of the n x n principal submatrix by shifted QR with
/// Wilkinson shifts; subdiagonals deflate when
///   |h_{k+1,k}| <= eps (|h_{kk}| + |h_{k+1,k+1}|),  eps = 2^{-(prec-8)}.
/// Throws NoConvergence after 40 n sweeps.
Spectrum hessenberg_eigenvalues(const HessenbergMatrix& H, int n);

/// Zeros of p as eigenvalues of the balanced monic companion matrix,
/// same QR engine. Requires deg(p) >= 1.
Spectrum polynomial_zeros_oracle(const ComplexPolynomial& p);

/// Max distance over a minimum-weight bipartite matching of the two
/// multisets. Both spectra must have equal length.
Real max_pairing_distance(const Spectrum& a, const Spectrum& b);

}  // namespace momrec

#endif  // MOMREC_SPECTRA_HPP
