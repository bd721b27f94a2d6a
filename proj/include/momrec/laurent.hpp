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

#ifndef MOMREC_LAURENT_HPP
#define MOMREC_LAURENT_HPP

#include <vector>

#include "momrec/precision.hpp"

namespace momrec {

/// Truncated exterior map  Psi(w) = b*w + c0 + c1/w + ... + cm/w^m.
/// b is the logarithmic capacity of the image curve and is real positive
/// by construction; maps assembled from numerical data keep the discarded
/// imaginary part of b in `imag_residue` as a diagnostic.
struct LaurentMap {
  Real b;
  std::vector<Complex> coeffs;  // c0..cm
  Real imag_residue;

  explicit LaurentMap(mpfr_prec_t prec = 53)
      : b(prec), imag_residue(prec) {}
  LaurentMap(Real cap, std::vector<Complex> cs)
      : b(std::move(cap)), coeffs(std::move(cs)), imag_residue(b.prec()) {}

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  mpfr_prec_t prec() const { return b.prec(); }
  /// gamma = 1/b, the leading coefficient of the direct map.
  Real gamma() const { return Real::of_si(1, b.prec()) / b; }

  /// Truncated-series value at w != 0. Throws ZeroArgument.
  Complex eval(const Complex& w) const;
  /// d/dw of the truncated series, used by the contour quadrature.
  Complex eval_derivative(const Complex& w) const;
};

/// Free-function spelling of LaurentMap::eval.
Complex laurent_eval(const LaurentMap& map, const Complex& w);

}  // namespace momrec

#endif  // MOMREC_LAURENT_HPP
