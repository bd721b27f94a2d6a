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

#ifndef MOMREC_PRECISION_HPP
#define MOMREC_PRECISION_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "momrec/errors.hpp"

namespace momrec {

/// Binary floating-point context shared by one pipeline run.
/// All arithmetic rounds to nearest-even at `bits` of mantissa.
struct PrecisionContext {
  mpfr_prec_t bits;

  explicit PrecisionContext(long mantissa_bits) : bits(mantissa_bits) {
    if (mantissa_bits < 53)
      throw PrecisionTooLow("mantissa_bits must be >= 53, got " +
                            std::to_string(mantissa_bits));
  }
};

/// Arbitrary-precision real backed by MPFR. A value carries its own
/// precision; binary operators widen the result to the larger operand
/// precision. Rounding is always to nearest-even.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 53) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(double d, mpfr_prec_t prec);
  static Real of_si(long n, mpfr_prec_t prec);
  /// Exact rational num/den rounded once at `prec`.
  static Real of_ratio(long num, long den, mpfr_prec_t prec);
  /// Parses a base-10 decimal string. Throws BadInputFile on garbage.
  static Real parse(const std::string& s, mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec);
  /// 2^e at the given precision (exact).
  static Real pow2(long e, mpfr_prec_t prec);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific decimal form with `sig_digits` significant digits.
  std::string str(int sig_digits = 17) const;

  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real operator-() const;
  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator<(const Real& a, const Real& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const Real& a, const Real& b) {
    return mpfr_greater_p(a.v_, b.v_) != 0;
  }
  friend bool operator<=(const Real& a, const Real& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator>=(const Real& a, const Real& b) {
    return mpfr_greaterequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend bool operator!=(const Real& a, const Real& b) {
    return !(a == b);
  }

  static Real sqrt(const Real& x);
  static Real abs(const Real& x);
  static Real log(const Real& x);
  static Real exp(const Real& x);
  static Real cos(const Real& x);
  static Real sin(const Real& x);
  static Real hypot(const Real& x, const Real& y);
  static Real pow(const Real& base, const Real& e);
  static Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
  static Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

  /// In-place multiply by 2^e (exact).
  void scale2(long e) { mpfr_mul_2si(v_, v_, e, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

/// Complex scalar on two Reals. Finite-value discipline: helpers that can
/// overflow check and throw EvaluationOverflow at their call sites.
class Complex {
 public:
  Real re, im;

  explicit Complex(mpfr_prec_t prec = 53) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static Complex of(double r, double i, mpfr_prec_t prec) {
    return Complex(Real::of(r, prec), Real::of(i, prec));
  }
  static Complex from_real(Real r) {
    Real z(r.prec());
    return Complex(std::move(r), std::move(z));
  }
  /// cos(theta) + i sin(theta), one mpfr_sin_cos call.
  static Complex unit(const Real& theta);

  mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex conj() const {
    Complex r(*this);
    mpfr_neg(r.im.raw(), r.im.raw(), MPFR_RNDN);
    return r;
  }
  Real norm2() const { return re * re + im * im; }
  Real abs() const { return Real::hypot(re, im); }

  Complex operator-() const { return Complex(-re, -im); }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
  }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re + b.re, a.im + b.im);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re - b.re, a.im - b.im);
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Complex operator*(const Complex& a, const Real& s) {
    return Complex(a.re * s, a.im * s);
  }
  friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
  friend Complex operator/(const Complex& a, const Complex& b);

  static Complex sqrt(const Complex& z);

  void set_zero() {
    mpfr_set_zero(re.raw(), 1);
    mpfr_set_zero(im.raw(), 1);
  }
};

// Allocation-free fused accumulators for hot loops. `t` is caller-provided
// scratch at result precision. acc must not alias a or b.

/// acc += a*b
inline void acc_addmul(Complex& acc, const Complex& a, const Complex& b, Real& t) {
  mpfr_fma(acc.re.raw(), a.re.raw(), b.re.raw(), acc.re.raw(), MPFR_RNDN);
  mpfr_mul(t.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_sub(acc.re.raw(), acc.re.raw(), t.raw(), MPFR_RNDN);
  mpfr_fma(acc.im.raw(), a.re.raw(), b.im.raw(), acc.im.raw(), MPFR_RNDN);
  mpfr_fma(acc.im.raw(), a.im.raw(), b.re.raw(), acc.im.raw(), MPFR_RNDN);
}

/// acc -= a*b
inline void acc_submul(Complex& acc, const Complex& a, const Complex& b, Real& t) {
  mpfr_fms(t.raw(), a.re.raw(), b.re.raw(), acc.re.raw(), MPFR_RNDN);
  mpfr_neg(acc.re.raw(), t.raw(), MPFR_RNDN);
  mpfr_fma(acc.re.raw(), a.im.raw(), b.im.raw(), acc.re.raw(), MPFR_RNDN);
  mpfr_fms(t.raw(), a.re.raw(), b.im.raw(), acc.im.raw(), MPFR_RNDN);
  mpfr_neg(acc.im.raw(), t.raw(), MPFR_RNDN);
  mpfr_mul(t.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_sub(acc.im.raw(), acc.im.raw(), t.raw(), MPFR_RNDN);
}

/// acc += a*conj(b)
inline void acc_addmul_conj(Complex& acc, const Complex& a, const Complex& b, Real& t) {
  mpfr_fma(acc.re.raw(), a.re.raw(), b.re.raw(), acc.re.raw(), MPFR_RNDN);
  mpfr_fma(acc.re.raw(), a.im.raw(), b.im.raw(), acc.re.raw(), MPFR_RNDN);
  mpfr_fma(acc.im.raw(), a.im.raw(), b.re.raw(), acc.im.raw(), MPFR_RNDN);
  mpfr_mul(t.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_sub(acc.im.raw(), acc.im.raw(), t.raw(), MPFR_RNDN);
}

}  // namespace momrec

#endif  // MOMREC_PRECISION_HPP
