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

#ifndef MOMREC_ERRORS_HPP
#define MOMREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace momrec {

/// Coarse failure classes used by the CLI to pick exit codes:
/// Spec -> 2, Numeric -> 3, Precision -> 4.
enum class ErrorCategory { Spec, Numeric, Precision };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, const std::string& name, const std::string& detail)
      : std::runtime_error(detail.empty() ? name : name + ": " + detail),
        category_(cat),
        name_(name) {}
  ErrorCategory category() const { return category_; }
  const std::string& name() const { return name_; }

 private:
  ErrorCategory category_;
  std::string name_;
};

#define MOMREC_DEFINE_ERROR(NAME, CATEGORY)                    \
  struct NAME : Error {                                        \
    explicit NAME(const std::string& detail = "")              \
        : Error(ErrorCategory::CATEGORY, #NAME, detail) {}     \
  }

MOMREC_DEFINE_ERROR(InvalidPolygon, Spec);
MOMREC_DEFINE_ERROR(NonJordanBoundary, Spec);
MOMREC_DEFINE_ERROR(InsufficientNodes, Spec);
MOMREC_DEFINE_ERROR(DegreeExceedsMoments, Spec);
MOMREC_DEFINE_ERROR(IncompleteRealMoments, Spec);
MOMREC_DEFINE_ERROR(IndexOutOfRange, Spec);
MOMREC_DEFINE_ERROR(ZeroArgument, Spec);
MOMREC_DEFINE_ERROR(BadInputFile, Spec);

MOMREC_DEFINE_ERROR(EvaluationOverflow, Numeric);
MOMREC_DEFINE_ERROR(MomentsNotPositiveDefinite, Numeric);
MOMREC_DEFINE_ERROR(NonHermitianInput, Numeric);
MOMREC_DEFINE_ERROR(NoConvergence, Numeric);

MOMREC_DEFINE_ERROR(PrecisionTooLow, Precision);

#undef MOMREC_DEFINE_ERROR

}  // namespace momrec

#endif  // MOMREC_ERRORS_HPP
