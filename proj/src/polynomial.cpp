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

#include "momrec/polynomial.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace momrec {

ComplexPolynomial ComplexPolynomial::constant(Complex c) {
  ComplexPolynomial p;
  p.coeffs.push_back(std::move(c));
  p.normalize();
  return p;
}

const Complex& ComplexPolynomial::coeff(int i) const {
  static const Complex zero_53(53);
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return zero_53;
  return coeffs[i];
}

mpfr_prec_t ComplexPolynomial::prec() const {
  mpfr_prec_t p = 53;
  for (const Complex& c : coeffs) p = std::max(p, c.prec());
  return p;
}

void ComplexPolynomial::normalize() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

ComplexPolynomial multiply_by_z(const ComplexPolynomial& p) {
  if (p.is_zero()) return p;
  ComplexPolynomial r;
  r.coeffs.reserve(p.coeffs.size() + 1);
  r.coeffs.emplace_back(p.prec());
  for (const Complex& c : p.coeffs) r.coeffs.push_back(c);
  return r;
}

Complex evaluate(const ComplexPolynomial& p, const Complex& z) {
  mpfr_prec_t prec = std::max(p.prec(), z.prec());
  Complex acc(prec);
  Real t(prec);
  for (size_t i = p.coeffs.size(); i-- > 0;) {
    Complex next(prec);
    acc_addmul(next, acc, z, t);
    next += p.coeffs[i];
    acc = std::move(next);
  }
  if (!acc.is_finite())
    throw EvaluationOverflow("polynomial evaluation left the exponent range");
  return acc;
}

Complex weighted_inner_product(const ComplexPolynomial& p,
                               const ComplexPolynomial& q,
                               const MomentMatrix& M) {
  if (p.degree() > M.degree() || q.degree() > M.degree())
    throw DegreeExceedsMoments(
        "inner product needs moments up to degree " +
        std::to_string(std::max(p.degree(), q.degree())) + ", table has " +
        std::to_string(M.degree()));
  mpfr_prec_t prec = M.prec();
  Complex sum(prec);
  Complex row(prec);
  Real t(prec);
  for (size_t a = 0; a < p.coeffs.size(); ++a) {
    row.set_zero();
    for (size_t b = 0; b < q.coeffs.size(); ++b)
      acc_addmul_conj(row, M.at(static_cast<int>(a), static_cast<int>(b)),
                      q.coeffs[b], t);
    acc_addmul(sum, p.coeffs[a], row, t);
  }
  return sum;
}

void sub_scaled(ComplexPolynomial& p, const Complex& alpha,
                const ComplexPolynomial& q) {
  if (q.is_zero()) return;
  mpfr_prec_t prec = std::max(p.prec(), std::max(alpha.prec(), q.prec()));
  if (p.coeffs.size() < q.coeffs.size())
    p.coeffs.resize(q.coeffs.size(), Complex(prec));
  Real t(prec);
  for (size_t i = 0; i < q.coeffs.size(); ++i)
    acc_submul(p.coeffs[i], alpha, q.coeffs[i], t);
}

ComplexPolynomial scaled(const ComplexPolynomial& p, const Real& s) {
  ComplexPolynomial r(p);
  for (Complex& c : r.coeffs) c *= s;
  return r;
}

}  // namespace momrec
