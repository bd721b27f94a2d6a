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

#ifndef MOMREC_POLYNOMIAL_HPP
#define MOMREC_POLYNOMIAL_HPP

#include <vector>

#include "momrec/moments.hpp"
#include "momrec/precision.hpp"

namespace momrec {

/// Dense polynomial in the monomial basis, coefficients ascending by
/// degree. The zero polynomial is the empty list.
struct ComplexPolynomial {
  std::vector<Complex> coeffs;

  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<Complex> cs) : coeffs(std::move(cs)) {}

  static ComplexPolynomial zero() { return ComplexPolynomial(); }
  static ComplexPolynomial constant(Complex c);

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  /// Coefficient of z^i; zero beyond the stored degree.
  const Complex& coeff(int i) const;
  mpfr_prec_t prec() const;

  /// Drops trailing coefficients that are exactly zero.
  void normalize();
};

/// Shift by one degree: z * p. Degree increases by exactly 1 for nonzero p.
ComplexPolynomial multiply_by_z(const ComplexPolynomial& p);

/// Horner evaluation. Throws EvaluationOverflow if the result leaves the
/// representable exponent range.
Complex evaluate(const ComplexPolynomial& p, const Complex& z);

/// <p, q> = sum_a sum_b p_a conj(q_b) mu_{a,b}. The double sum over the
/// moment table is the single source of truth for the inner product.
/// Throws DegreeExceedsMoments when the table is too small.
Complex weighted_inner_product(const ComplexPolynomial& p,
                               const ComplexPolynomial& q,
                               const MomentMatrix& M);

// In-place vector-space helpers used by the orthogonalization loop.
void sub_scaled(ComplexPolynomial& p, const Complex& alpha,
                const ComplexPolynomial& q);  // p -= alpha*q
ComplexPolynomial scaled(const ComplexPolynomial& p, const Real& s);

}  // namespace momrec

#endif  // MOMREC_POLYNOMIAL_HPP
