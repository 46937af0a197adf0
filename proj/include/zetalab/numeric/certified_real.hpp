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

#ifndef ZETALAB_NUMERIC_CERTIFIED_REAL_HPP
#define ZETALAB_NUMERIC_CERTIFIED_REAL_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "zetalab/numeric/real.hpp"

namespace zetalab {

/// Extra bits carried internally on top of a requested precision.
inline constexpr int kGuardBits = 32;

inline mpfr_prec_t working_precision(int precision_bits) {
  return static_cast<mpfr_prec_t>(precision_bits + kGuardBits);
}

/// A midpoint/radius ball: the true quantity lies in
/// [value - abs_error, value + abs_error].
///
/// The midpoint is rounded to nearest at the working precision; every
/// rounding is charged to the radius, which is itself always rounded up.
class CertifiedReal {
 public:
  static constexpr mpfr_prec_t kRadiusPrecision = 64;

  CertifiedReal(Real value, Real abs_error, int precision_bits)
      : mid_(std::move(value)), rad_(kRadiusPrecision), precision_bits_(precision_bits) {
    if (abs_error.sign() < 0) throw std::domain_error("CertifiedReal: negative radius");
    mpfr_set(rad_.get(), abs_error.get(), MPFR_RNDU);
  }

  /// Ball around an exact rational center with an exact rational radius.
  static CertifiedReal from_rational(const Rational& center, const Rational& radius,
                                     int precision_bits) {
    if (radius.sign() < 0) throw std::domain_error("CertifiedReal: negative radius");
    const mpfr_prec_t wp = working_precision(precision_bits);
    Real mid(wp);
    const int inexact = mpfr_set_q(mid.get(), center.raw().get_mpq_t(), MPFR_RNDN);
    Real rad = Real::from_rational(radius, kRadiusPrecision, MPFR_RNDU);
    if (inexact != 0) add_ulp(rad, mid);
    return {std::move(mid), std::move(rad), precision_bits};
  }

  static CertifiedReal exact(const Rational& q, int precision_bits) {
    return from_rational(q, Rational(0), precision_bits);
  }

  const Real& value() const { return mid_; }
  const Real& abs_error() const { return rad_; }
  int precision_bits() const { return precision_bits_; }

  Real lower() const {
    Real r(mid_.precision());
    mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return r;
  }
  Real upper() const {
    Real r(mid_.precision());
    mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return r;
  }

  /// Radius relative to |value|, rounded up; infinite for a zero midpoint.
  Real relative_error() const {
    Real r(kRadiusPrecision);
    Real m = abs_down(mid_);
    mpfr_div(r.get(), rad_.get(), m.get(), MPFR_RNDU);
    return r;
  }

  CertifiedReal operator-() const {
    Real m(mid_.precision());
    mpfr_neg(m.get(), mid_.get(), MPFR_RNDN);
    return {std::move(m), rad_, precision_bits_};
  }

  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
    const int bits = std::min(a.precision_bits_, b.precision_bits_);
    Real m(std::max(a.mid_.precision(), b.mid_.precision()));
    const int inexact = mpfr_add(m.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    Real r(kRadiusPrecision);
    mpfr_add(r.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    if (inexact != 0) add_ulp(r, m);
    return {std::move(m), std::move(r), bits};
  }
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) { return a + (-b); }

  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
    const int bits = std::min(a.precision_bits_, b.precision_bits_);
    Real m(std::max(a.mid_.precision(), b.mid_.precision()));
    const int inexact = mpfr_mul(m.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    // |a||rb| + |b||ra| + ra rb
    Real r(kRadiusPrecision), t(kRadiusPrecision);
    Real abs_a = abs_up(a.mid_), abs_b = abs_up(b.mid_);
    mpfr_mul(r.get(), abs_a.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_mul(t.get(), abs_b.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDU);
    if (inexact != 0) add_ulp(r, m);
    return {std::move(m), std::move(r), bits};
  }

  friend CertifiedReal operator*(const CertifiedReal& a, const Rational& q) {
    return a * from_rational(q, Rational(0), a.precision_bits_);
  }
  friend CertifiedReal operator*(const Rational& q, const CertifiedReal& a) { return a * q; }
  friend CertifiedReal operator+(const CertifiedReal& a, const Rational& q) {
    return a + from_rational(q, Rational(0), a.precision_bits_);
  }
  friend CertifiedReal operator-(const CertifiedReal& a, const Rational& q) { return a + (-q); }
  friend CertifiedReal operator-(const Rational& q, const CertifiedReal& a) { return (-a) + q; }

  /// Strict ordering against an exact rational; empty when q is not
  /// separated from the ball (including q on its boundary).
  std::optional<std::strong_ordering> compare(const Rational& q) const {
    const Real lo = lower(), hi = upper();
    if (mpfr_cmp_q(hi.get(), q.raw().get_mpq_t()) < 0) return std::strong_ordering::less;
    if (mpfr_cmp_q(lo.get(), q.raw().get_mpq_t()) > 0) return std::strong_ordering::greater;
    return std::nullopt;
  }

  /// Decides x < q: true/false when certain, empty otherwise.
  std::optional<bool> less_than(const Rational& q) const {
    const Real lo = lower(), hi = upper();
    if (mpfr_cmp_q(hi.get(), q.raw().get_mpq_t()) < 0) return true;
    if (mpfr_cmp_q(lo.get(), q.raw().get_mpq_t()) >= 0) return false;
    return std::nullopt;
  }
  /// Decides x <= q.
  std::optional<bool> less_equal(const Rational& q) const {
    const Real lo = lower(), hi = upper();
    if (mpfr_cmp_q(hi.get(), q.raw().get_mpq_t()) <= 0) return true;
    if (mpfr_cmp_q(lo.get(), q.raw().get_mpq_t()) > 0) return false;
    return std::nullopt;
  }
  /// Decides x > q.
  std::optional<bool> greater_than(const Rational& q) const {
    auto le = less_equal(q);
    if (!le) return std::nullopt;
    return !*le;
  }

  bool contains(const Rational& q) const { return !compare(q).has_value(); }

  bool contains(const CertifiedReal& other) const {
    const Real lo = lower(), hi = upper(), olo = other.lower(), ohi = other.upper();
    return mpfr_lessequal_p(lo.get(), olo.get()) && mpfr_lessequal_p(ohi.get(), hi.get());
  }

  bool overlaps(const CertifiedReal& other) const {
    const Real lo = lower(), hi = upper(), olo = other.lower(), ohi = other.upper();
    return mpfr_lessequal_p(lo.get(), ohi.get()) && mpfr_lessequal_p(olo.get(), hi.get());
  }

  /// Floor of the enclosed quantity, or empty if the ball meets an integer
  /// other than at its lower end.
  std::optional<Integer> floor() const {
    const Real lo = lower(), hi = upper();
    if (!lo.is_finite() || !hi.is_finite()) return std::nullopt;
    Integer flo, fhi;
    mpfr_get_z(flo.get_mpz_t(), lo.get(), MPFR_RNDD);
    mpfr_get_z(fhi.get_mpz_t(), hi.get(), MPFR_RNDD);
    if (flo != fhi) return std::nullopt;
    if (mpfr_integer_p(hi.get()) && mpfr_cmp(lo.get(), hi.get()) != 0) return std::nullopt;
    return flo;
  }

  /// "mid ± radius" with the midpoint shown to `digits` significant digits;
  /// the printed radius also covers the decimal rounding of the midpoint.
  std::string str(int digits = 40) const {
    Real shown(kRadiusPrecision);
    if (mid_.is_zero()) {
      mpfr_set(shown.get(), rad_.get(), MPFR_RNDU);
    } else {
      // |mid| * 10^(1 - digits) bounds the decimal truncation.
      Real scale(kRadiusPrecision);
      mpfr_set_ui(scale.get(), 10, MPFR_RNDN);
      mpfr_pow_si(scale.get(), scale.get(), 1 - digits, MPFR_RNDU);
      Real a = abs_up(mid_);
      mpfr_mul(shown.get(), a.get(), scale.get(), MPFR_RNDU);
      mpfr_add(shown.get(), shown.get(), rad_.get(), MPFR_RNDU);
    }
    return mid_.to_string(digits) + " ± " + shown.to_string(3, MPFR_RNDU);
  }

 private:
  static Real abs_up(const Real& x) {
    Real r(kRadiusPrecision);
    mpfr_abs(r.get(), x.get(), MPFR_RNDU);
    return r;
  }
  static Real abs_down(const Real& x) {
    Real r(kRadiusPrecision);
    mpfr_abs(r.get(), x.get(), MPFR_RNDD);
    return r;
  }
  /// rad += ulp(mid), one full unit in the last place of the rounded value.
  static void add_ulp(Real& rad, const Real& mid) {
    if (mid.is_zero()) return;
    Real u(kRadiusPrecision);
    mpfr_set_ui_2exp(u.get(), 1, mid.exponent() - mid.precision(), MPFR_RNDU);
    mpfr_add(rad.get(), rad.get(), u.get(), MPFR_RNDU);
  }

  Real mid_;
  Real rad_;
  int precision_bits_;
};

}  // namespace zetalab

#endif  // ZETALAB_NUMERIC_CERTIFIED_REAL_HPP
