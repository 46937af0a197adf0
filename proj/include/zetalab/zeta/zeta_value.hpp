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

#ifndef ZETALAB_ZETA_ZETA_VALUE_HPP
#define ZETALAB_ZETA_ZETA_VALUE_HPP

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "zetalab/exact/combinatorics.hpp"
#include "zetalab/exact/lcm_table.hpp"
#include "zetalab/numeric/certified_real.hpp"
#include "zetalab/zeta/alternating.hpp"
#include "zetalab/zeta/bernoulli.hpp"

namespace zetalab {

inline void require_zeta_args(int m, int precision_bits) {
  if (m < 2) throw std::domain_error("zeta: m must be >= 2, got " + std::to_string(m));
  if (precision_bits < 64)
    throw std::domain_error("zeta: precision_bits must be >= 64, got " + std::to_string(precision_bits));
}

/// zeta(s) for integer s >= 2 as an exact rational enclosure with radius
/// below 2^-target_bits.
///
/// Direct summation of k^-s for k < N, the integral-test tail
/// N^(1-s)/(s-1), then Euler-Maclaurin corrections. The remainder after M
/// corrections is bounded by |B_2M|/(2M)! (s)_2M N^(1-s-2M)/(s+2M-1).
inline RationalEnclosure zeta_euler_maclaurin(unsigned s, long target_bits) {
  if (s < 2) throw std::domain_error("zeta_euler_maclaurin: s must be >= 2");
  const unsigned long cutoff = static_cast<unsigned long>(std::max(10L, target_bits / 5));

  // sum_{k<N} k^-s over the common denominator lcm(1..N-1)^s.
  const Integer common = ipow(LcmTable(cutoff - 1)[cutoff - 1], s);
  Integer numerator = 0;
  for (unsigned long k = 1; k < cutoff; ++k) numerator += common / ipow(k, s);
  Rational center(numerator, common);

  const Integer n_pow_s = ipow(cutoff, s);
  center += Rational(Integer(cutoff), n_pow_s * (s - 1));  // integral tail
  center += Rational(Integer(1), 2 * n_pow_s);

  const Rational threshold = pow2_rational(-target_bits);
  for (unsigned j = 1;; ++j) {
    const Rational coeff = bernoulli_even(j) / Rational(factorial(2 * j));
    center += coeff * Rational(rising_factorial(s, 2 * j - 1), ipow(cutoff, s + 2 * j - 1));
    // Remainder after corrections 1..j.
    const Rational bound = coeff.abs() *
                           Rational(rising_factorial(s, 2 * j)) /
                           Rational(ipow(cutoff, s + 2 * j - 1) * (s + 2 * j - 1));
    if (bound <= threshold) return {center, bound};
    if (j > 4 * cutoff) throw std::logic_error("zeta_euler_maclaurin: remainder did not shrink");
  }
}

/// eta(s) = sum (-1)^(k-1) k^-s via the accelerated alternating scheme.
inline RationalEnclosure eta_accelerated(unsigned s, long target_bits) {
  return accelerated_alternating_power_sum(1, s, acceleration_terms(target_bits));
}

namespace detail {

struct ZetaCacheEntry {
  RationalEnclosure zeta;
  RationalEnclosure eta;
};

inline ZetaCacheEntry compute_zeta_entry(int m, int precision_bits) {
  const unsigned s = static_cast<unsigned>(2 * m + 1);
  const long target = static_cast<long>(working_precision(precision_bits)) + 8;
  ZetaCacheEntry e{zeta_euler_maclaurin(s, target), eta_accelerated(s, target)};

  // Independent route: zeta = eta / (1 - 2^-2m).
  const Rational factor = Rational(1) - pow2_rational(-2L * m);
  const Rational via_eta = e.eta.center / factor;
  const Rational via_eta_radius = e.eta.radius / factor;
  if ((via_eta - e.zeta.center).abs() > via_eta_radius + e.zeta.radius)
    throw std::logic_error("zeta(" + std::to_string(s) + "): summation and eta routes disagree");
  return e;
}

inline const ZetaCacheEntry& zeta_entry(int m, int precision_bits) {
  static std::shared_mutex mu;
  static std::map<std::pair<int, int>, ZetaCacheEntry> cache;
  const auto key = std::make_pair(m, precision_bits);
  {
    std::shared_lock lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  ZetaCacheEntry entry = compute_zeta_entry(m, precision_bits);
  std::unique_lock lock(mu);
  return cache.try_emplace(key, std::move(entry)).first->second;
}

}  // namespace detail

/// Exact rational enclosure of zeta(2m+1), radius below 2^-(precision_bits+40).
inline const RationalEnclosure& zeta_enclosure(int m, int precision_bits) {
  require_zeta_args(m, precision_bits);
  return detail::zeta_entry(m, precision_bits).zeta;
}

/// Certified zeta(2m+1). Computed by summation with an integral-test tail
/// and cross-validated against the alternating (eta) route.
inline CertifiedReal zeta_value(int m, int precision_bits) {
  const auto& z = zeta_enclosure(m, precision_bits);
  return CertifiedReal::from_rational(z.center, z.radius, precision_bits);
}

/// Certified eta(2m+1) from the accelerated alternating series alone.
inline CertifiedReal eta_value(int m, int precision_bits) {
  require_zeta_args(m, precision_bits);
  const auto& e = detail::zeta_entry(m, precision_bits).eta;
  return CertifiedReal::from_rational(e.center, e.radius, precision_bits);
}

}  // namespace zetalab

#endif  // ZETALAB_ZETA_ZETA_VALUE_HPP
