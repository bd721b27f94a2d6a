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

#ifndef MOMREC_IO_HPP
#define MOMREC_IO_HPP

#include <string>
#include <vector>

#include "momrec/arnoldi.hpp"
#include "momrec/domain.hpp"
#include "momrec/laurent.hpp"
#include "momrec/moments.hpp"
#include "momrec/reconstruction.hpp"
#include "momrec/spectra.hpp"

namespace momrec {

/// Interchange default: 40 significant decimal digits (covers 132-bit
/// binary precision).
inline constexpr int kDefaultDigits = 40;

// Moment table: CSV `k,j,re,im`, one row per k <= j entry (Hermitian
// completion on load; full tables are also accepted).
void write_moments_csv(const std::string& path, const MomentMatrix& M,
                       int digits = kDefaultDigits);
MomentMatrix read_moments_csv(const std::string& path,
                              const PrecisionContext& ctx);

// Hessenberg matrix: metadata lines `# order=n` and `# precision_bits=P`,
// then `k,j,re,im` rows for all structural entries.
void write_hessenberg_csv(const std::string& path, const HessenbergMatrix& H,
                          int digits = kDefaultDigits);
HessenbergMatrix read_hessenberg_csv(const std::string& path);

// Spectrum: `# residual=` header then `index,re,im`.
void write_spectrum_csv(const std::string& path, const Spectrum& spec,
                        int digits = kDefaultDigits);

// Curve: CSV `theta,re,im`.
void write_curve_csv(const std::string& path,
                     const std::vector<CurveSample>& curve,
                     int digits = kDefaultDigits);

// Error/rate table, print format matching the validation tables:
// 9 decimal places for b columns, 3 significant digits for t columns,
// 4 decimal places for s columns (blank when undefined).
void write_rate_table_csv(const std::string& path,
                          const std::vector<RateRow>& rows);

// Laurent map JSON: {"b": "<decimal>", "coeffs": [[re,im],...],
// "order": m} with decimal strings.
void write_laurent_json(const std::string& path, const LaurentMap& map,
                        int digits = kDefaultDigits);
LaurentMap read_laurent_json(const std::string& path,
                             const PrecisionContext& ctx);

// Domain spec JSON: {"type": "polygon"|"laurent"|"named", ...}.
DomainSpec read_domain_json(const std::string& path,
                            const PrecisionContext& ctx);

// Reconstruction report JSON.
void write_report_json(const std::string& path,
                       const ReconstructionReport& report,
                       int digits = kDefaultDigits);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace momrec

#endif  // MOMREC_IO_HPP
