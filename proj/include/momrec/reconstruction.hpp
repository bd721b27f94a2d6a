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

#ifndef MOMREC_RECONSTRUCTION_HPP
#define MOMREC_RECONSTRUCTION_HPP

#include <optional>
#include <vector>

#include "momrec/arnoldi.hpp"
#include "momrec/domain.hpp"
#include "momrec/laurent.hpp"
#include "momrec/moments.hpp"

namespace momrec {

/// Boundary sample: point = Psi_est(e^{i theta}).
struct CurveSample {
  Real theta;
  Complex point;
};

/// One row of the error/rate tables: the capacity estimate and the k-th
/// coefficient estimate at order n, their errors against the reference,
/// and the observed-rate estimators
///   s = log(|t^{(n)}|/|t^{(n')}|) / log(n'/n)
/// from consecutive rows (empty on the last row or under zero error).
struct RateRow {
  int n = 0;
  Real b_est, t, s;
  Complex bk_est;
  Real tk, sk;
  bool s_defined = false;
  bool sk_defined = false;

  explicit RateRow(mpfr_prec_t prec = 53)
      : b_est(prec), t(prec), s(prec), bk_est(prec), tk(prec), sk(prec) {}
};

struct ReconstructionReport {
  int n = 0, m = 0;
  LaurentMap laurent;
  std::vector<CurveSample> curve;
  std::optional<Real> sup_error;
  std::vector<RateRow> rate_rows;
};

/// Moments -> Arnoldi -> scaled diagonals -> truncated exterior map.
/// The capacity estimate keeps only its real part; the discarded
/// imaginary magnitude lands in the map's imag_residue diagnostic.
/// Requires moments to degree n+1 and 1 < m < n.
LaurentMap reconstruct(const MomentMatrix& M, int n, int m,
                       const ArnoldiOptions& opts = {});

/// K equispaced boundary samples of the truncated map on |w| = 1.
std::vector<CurveSample> curve_points(const LaurentMap& map, int K);

/// max over K equispaced samples on |w|=1 of |ref(w) - est(w)|.
/// Requires K >= 64.
Real sup_distance(const LaurentMap& ref, const LaurentMap& est, int K);

/// Rate-table machinery: one full Arnoldi run per row (rows are
/// independent; no incremental reuse), shared exact moments to degree
/// max(n_list)+1. `k` picks the tracked coefficient column.
std::vector<RateRow> rate_table(const DomainSpec& domain,
                                const LaurentMap& reference,
                                const std::vector<int>& n_list, int k,
                                const PrecisionContext& ctx, int workers = 1);

/// Two-polyline SVG (reference first when given), viewBox fit with 5%
/// margin.
std::string curves_svg(const std::vector<CurveSample>& reconstructed,
                       const std::vector<CurveSample>* reference);

}  // namespace momrec

#endif  // MOMREC_RECONSTRUCTION_HPP
