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

#include "momrec/laurent.hpp"

#include "momrec/errors.hpp"

namespace momrec {

Complex LaurentMap::eval(const Complex& w) const {
  if (w.is_zero()) throw ZeroArgument("laurent_eval at w = 0");
  mpfr_prec_t p = prec() > w.prec() ? prec() : w.prec();
  Complex result = w * b;
  if (coeffs.empty()) return result;
  result += coeffs[0];
  if (coeffs.size() == 1) return result;
  // Negative powers by Horner in u = 1/w:
  //   c1*u + c2*u^2 + ... = u*(c1 + u*(c2 + ...)).
  Complex one(p);
  mpfr_set_ui(one.re.raw(), 1, MPFR_RNDN);
  Complex u = one / w;
  Complex acc(p);
  for (size_t k = coeffs.size(); k-- > 1;) {
    acc += coeffs[k];
    acc = acc * u;
  }
  result += acc;
  return result;
}

Complex LaurentMap::eval_derivative(const Complex& w) const {
  if (w.is_zero()) throw ZeroArgument("laurent derivative at w = 0");
  mpfr_prec_t p = prec() > w.prec() ? prec() : w.prec();
  Complex result(p);
  result.re = b;
  // d/dw of ck w^{-k} is -k ck w^{-k-1}; Horner in u = 1/w applied to
  //   -(c1 + 2 c2 u + 3 c3 u^2 + ...) u^2.
  if (coeffs.size() <= 1) return result;
  Complex one(p);
  mpfr_set_ui(one.re.raw(), 1, MPFR_RNDN);
  Complex u = one / w;
  Complex acc(p);
  for (size_t k = coeffs.size(); k-- > 1;) {
    acc += coeffs[k] * Real::of_si(static_cast<long>(k), p);
    acc = acc * u;
  }
  acc = acc * u;
  result -= acc;
  return result;
}

Complex laurent_eval(const LaurentMap& map, const Complex& w) {
  return map.eval(w);
}

}  // namespace momrec
