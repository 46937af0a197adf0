// Copyright 2026 The zetalab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZETALAB_NUMERIC_REAL_HPP
#define ZETALAB_NUMERIC_REAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "zetalab/exact/rational.hpp"

namespace zetalab {

/// Owning wrapper around an mpfr_t. Every arithmetic call names its
/// rounding direction; nothing here rounds implicitly.
class Real {
 public:
  explicit Real(mpfr_prec_t precision = 64) {
    mpfr_init2(x_, precision);
    mpfr_set_zero(x_, 1);
  }
  Real(mpfr_prec_t precision, long value) : Real(precision) { mpfr_set_si(x_, value, MPFR_RNDN); }

  Real(const Real& other) {
    mpfr_init2(x_, mpfr_get_prec(other.x_));
    mpfr_set(x_, other.x_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(x_, mpfr_get_prec(other.x_));
    mpfr_swap(x_, other.x_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(x_, mpfr_get_prec(other.x_));
      mpfr_set(x_, other.x_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(x_, other.x_);
    return *this;
  }
  ~Real() { mpfr_clear(x_); }

  static Real from_rational(const Rational& q, mpfr_prec_t precision, mpfr_rnd_t rnd) {
    Real r(precision);
    mpfr_set_q(r.x_, q.raw().get_mpq_t(), rnd);
    return r;
  }
  static Real from_integer(const Integer& z, mpfr_prec_t precision, mpfr_rnd_t rnd) {
    Real r(precision);
    mpfr_set_z(r.x_, z.get_mpz_t(), rnd);
    return r;
  }
  /// 2^e exactly.
  static Real exp2(long e, mpfr_prec_t precision = 64) {
    Real r(precision);
    mpfr_set_ui_2exp(r.x_, 1, e, MPFR_RNDN);
    return r;
  }

  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }

  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_finite() const { return mpfr_number_p(x_) != 0; }
  int sign() const { return mpfr_sgn(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; meaningless for zero.
  mpfr_exp_t exponent() const { return mpfr_get_exp(x_); }

  /// Decimal scientific string with the given number of significant digits.
  std::string to_string(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const {
    if (mpfr_nan_p(x_)) return "nan";
    if (mpfr_inf_p(x_)) return mpfr_sgn(x_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(x_)) return "0";
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), x_, rnd);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (mant[0] == '-') {
      sign = "-";
      mant.erase(0, 1);
    }
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    const long e = static_cast<long>(exp10) - 1;
    if (e != 0) out += "e" + std::to_string(e);
    return out;
  }

 private:
  mpfr_t x_;
};

}  // namespace zetalab

#endif  // ZETALAB_NUMERIC_REAL_HPP
