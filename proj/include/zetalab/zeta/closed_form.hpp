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

#ifndef ZETALAB_ZETA_CLOSED_FORM_HPP
#define ZETALAB_ZETA_CLOSED_FORM_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "zetalab/exact/combinatorics.hpp"
#include "zetalab/numeric/certified_real.hpp"
#include "zetalab/zeta/zeta_value.hpp"

namespace zetalab {

/// Alternating partial sums sum_{k=1}^{M} (-1)^(k-1) / k^(2m+1) for
/// M = 0 .. max_terms, computed in one pass.
inline std::vector<Rational> eta_partial_table(unsigned long max_terms, int m) {
  if (m < 2) throw std::domain_error("eta_partial: m must be >= 2");
  const unsigned s = static_cast<unsigned>(2 * m + 1);
  std::vector<Rational> out;
  out.reserve(max_terms + 1);
  out.emplace_back(0);
  for (unsigned long k = 1; k <= max_terms; ++k) {
    Rational t(Integer(1), ipow(k, s));
    out.push_back(k % 2 == 1 ? out.back() + t : out.back() - t);
  }
  return out;
}

inline Rational eta_partial(unsigned long terms, int m) { return eta_partial_table(terms, m).back(); }

/// 1 - 2^-2m, the factor with eta(2m+1) = factor * zeta(2m+1).
inline Rational eta_zeta_factor(int m) {
  if (m < 2) throw std::domain_error("eta_zeta_factor: m must be >= 2");
  return Rational(1) - pow2_rational(-2L * m);
}

/// The exact value alpha * zeta(2m+1) + beta.
struct ZetaAffine {
  int m = 2;
  Rational alpha;
  Rational beta;

  CertifiedReal evaluate(int precision_bits) const {
    const auto& z = zeta_enclosure(m, precision_bits);
    return CertifiedReal::from_rational(alpha * z.center + beta, alpha.abs() * z.radius,
                                        precision_bits);
  }

  /// Value with zeta(2m+1) replaced by an exact rational.
  Rational substitute(const Rational& zeta) const { return alpha * zeta + beta; }

  static ZetaAffine zeta(int m) { return {m, Rational(1), Rational(0)}; }
  static ZetaAffine constant(int m, const Rational& q) { return {m, Rational(0), q}; }

  friend ZetaAffine operator+(const ZetaAffine& f, const ZetaAffine& g) {
    check_same_m(f, g);
    return {f.m, f.alpha + g.alpha, f.beta + g.beta};
  }
  friend ZetaAffine operator-(const ZetaAffine& f, const ZetaAffine& g) {
    check_same_m(f, g);
    return {f.m, f.alpha - g.alpha, f.beta - g.beta};
  }
  friend ZetaAffine operator+(const ZetaAffine& f, const Rational& q) { return {f.m, f.alpha, f.beta + q}; }
  friend ZetaAffine operator-(const ZetaAffine& f, const Rational& q) { return {f.m, f.alpha, f.beta - q}; }
  friend ZetaAffine operator*(const ZetaAffine& f, const Rational& q) { return {f.m, f.alpha * q, f.beta * q}; }
  friend ZetaAffine operator*(const Rational& q, const ZetaAffine& f) { return f * q; }
  friend ZetaAffine operator/(const ZetaAffine& f, const Rational& q) { return f * q.inverse(); }
  friend bool operator==(const ZetaAffine& f, const ZetaAffine& g) {
    return f.m == g.m && f.alpha == g.alpha && f.beta == g.beta;
  }

 private:
  static void check_same_m(const ZetaAffine& f, const ZetaAffine& g) {
    if (f.m != g.m) throw std::domain_error("ZetaAffine: mixing different zeta values");
  }
};

/// (2^{2m} - 1) 2^{n - 2m}, the magnitude of the zeta coefficient.
inline Rational zeta_coefficient_magnitude(unsigned long n, int m) {
  return Rational(pow2(2UL * m) - 1) * pow2_rational(static_cast<long>(n) - 2L * m);
}

namespace detail {
// sum_{s=0}^{n} C(n, s) * eta_partial(n + s, m)
inline Rational weighted_eta_sum(unsigned long n, int m) {
  const auto partial = eta_partial_table(2 * n, m);
  const auto row = binomial_row(n);
  Rational acc;
  for (unsigned long s = 0; s <= n; ++s) acc += Rational(row[s]) * partial[n + s];
  return acc;
}
}  // namespace detail

/// I_{n,m} = (-1)^n (2^{2m}-1) 2^{n-2m} zeta(2m+1)
///           + (-1)^{n+1} sum_s C(n,s) eta_partial(n+s, m).
inline ZetaAffine closed_form_I(unsigned long n, int m) {
  if (n < 1) throw std::domain_error("closed_form_I: n must be >= 1");
  if (m < 2) throw std::domain_error("closed_form_I: m must be >= 2");
  const Rational mag = zeta_coefficient_magnitude(n, m);
  const Rational sum = detail::weighted_eta_sum(n, m);
  const bool even = n % 2 == 0;
  return ZetaAffine{m, even ? mag : -mag, even ? -sum : sum};
}

/// P*_{n,m} = sum_{s=0}^{2n} C(2n,s) eta_partial(2n+s, m) / ((2^{2m}-1) 2^{2n-2m}).
/// P*_{n,2} is P_n.
inline Rational p_star(unsigned long n, int m) {
  if (n < 1) throw std::domain_error("p_star: n must be >= 1");
  if (m < 2) throw std::domain_error("p_star: m must be >= 2");
  return detail::weighted_eta_sum(2 * n, m) / zeta_coefficient_magnitude(2 * n, m);
}

}  // namespace zetalab

#endif  // ZETALAB_ZETA_CLOSED_FORM_HPP
