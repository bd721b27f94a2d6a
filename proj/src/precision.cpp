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

#include "momrec/precision.hpp"

#include <cstdio>
#include <vector>

namespace momrec {

Real Real::of(double d, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, d, MPFR_RNDN);
  return r;
}

Real Real::of_si(long n, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, n, MPFR_RNDN);
  return r;
}

Real Real::of_ratio(long num, long den, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, num, MPFR_RNDN);
  mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw BadInputFile("cannot parse decimal value '" + s + "'");
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

std::string Real::str(int sig_digits) const {
  if (sig_digits < 1) sig_digits = 1;
  // %.*Re prints one digit before the point plus sig_digits-1 after.
  std::vector<char> buf(sig_digits + 32);
  int n = mpfr_snprintf(buf.data(), buf.size(), "%.*Re", sig_digits - 1, v_);
  if (n < 0 || n >= static_cast<int>(buf.size())) {
    buf.resize(n > 0 ? n + 1 : 4096);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", sig_digits - 1, v_);
  }
  return std::string(buf.data());
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

namespace {
inline mpfr_prec_t max_prec(const Real& a, const Real& b) {
  return a.prec() > b.prec() ? a.prec() : b.prec();
}
}  // namespace

Real operator+(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real Real::sqrt(const Real& x) {
  Real r(x.prec());
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}
Real Real::abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}
Real Real::log(const Real& x) {
  Real r(x.prec());
  mpfr_log(r.v_, x.v_, MPFR_RNDN);
  return r;
}
Real Real::exp(const Real& x) {
  Real r(x.prec());
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}
Real Real::cos(const Real& x) {
  Real r(x.prec());
  mpfr_cos(r.v_, x.v_, MPFR_RNDN);
  return r;
}
Real Real::sin(const Real& x) {
  Real r(x.prec());
  mpfr_sin(r.v_, x.v_, MPFR_RNDN);
  return r;
}
Real Real::hypot(const Real& x, const Real& y) {
  Real r(max_prec(x, y));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
Real Real::pow(const Real& base, const Real& e) {
  Real r(max_prec(base, e));
  mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
  return r;
}

Complex Complex::unit(const Real& theta) {
  Complex z(theta.prec());
  mpfr_sin_cos(z.im.raw(), z.re.raw(), theta.raw(), MPFR_RNDN);
  return z;
}

Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.norm2();
  Complex num = a * b.conj();
  num.re /= d;
  num.im /= d;
  return num;
}

Complex Complex::sqrt(const Complex& z) {
  mpfr_prec_t p = z.prec();
  if (z.is_zero()) return Complex(p);
  Real m = z.abs();
  Real ar = Real::abs(z.re);
  Real half = Real::of_ratio(1, 2, p);
  Real u = Real::sqrt((m + ar) * half);
  Complex r(p);
  if (z.re.sign() >= 0) {
    r.re = u;
    r.im = z.im / (u + u);
  } else {
    Real v = z.im / (u + u);
    r.re = Real::abs(v);
    r.im = (z.im.sign() >= 0) ? u : -u;
  }
  return r;
}

}  // namespace momrec
