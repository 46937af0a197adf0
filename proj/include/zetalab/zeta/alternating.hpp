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

#ifndef ZETALAB_ZETA_ALTERNATING_HPP
#define ZETALAB_ZETA_ALTERNATING_HPP

#include <cmath>
#include <vector>

#include "zetalab/exact/rational.hpp"

namespace zetalab {

/// An exact rational center with an exact rational error radius.
struct RationalEnclosure {
  Rational center;
  Rational radius;
};

/// Coefficients of the shifted Chebyshev polynomial
/// T_n(1 - 2x) = sum_k (-1)^k p_k x^k, with p_k = n/(n+k) C(n+k, 2k) 4^k.
inline std::vector<Integer> shifted_chebyshev_coefficients(unsigned n) {
  std::vector<Integer> p(n + 1);
  p[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n + k, 2 * k);
    p[k] = c * n * pow2(2 * k) / (n + k);
  }
  return p;
}

/// Number of accelerated terms so that (3 + sqrt 8)^terms >= 2^target_bits.
inline unsigned acceleration_terms(long target_bits) {
  const double per_term = std::log2(3.0 + std::sqrt(8.0));
  return static_cast<unsigned>(std::ceil(static_cast<double>(std::max(target_bits, 1L)) / per_term)) + 1;
}

/// sum_{k>=0} (-1)^k / (first + k)^power, accelerated with the
/// Chebyshev-weighted scheme of Cohen, Rodriguez Villegas and Zagier.
///
/// The weights are exact integers, so the partial value is an exact
/// rational. The terms 1/(first+k)^power are moments of a positive measure
/// on [0,1], which gives |S - S_n| <= S / T_n(3) <= first^-power / T_n(3).
inline RationalEnclosure accelerated_alternating_power_sum(unsigned long first, unsigned power,
                                                           unsigned terms) {
  const auto p = shifted_chebyshev_coefficients(terms);
  Integer d = 0;
  for (const auto& c : p) d += c;  // T_n(3)

  // Common denominator L = lcm(first..first+terms-1)^power.
  Integer l = 1;
  for (unsigned k = 0; k < terms; ++k) l = lcm(l, Integer(first + k));
  const Integer common = ipow(l, power);

  Integer tail = d;  // sum_{j>k} p_j
  Integer numerator = 0;
  for (unsigned k = 0; k < terms; ++k) {
    tail -= p[k];
    const Integer term = (common / ipow(first + k, power)) * tail;
    if (k % 2 == 0) numerator += term; else numerator -= term;
  }
  RationalEnclosure out;
  out.center = Rational(numerator, common * d);
  out.radius = Rational(Integer(1), ipow(first, power) * d);
  return out;
}

/// Plain partial sum sum_{k<terms} (-1)^k / (first + k)^power.
inline Rational alternating_power_partial_sum(unsigned long first, unsigned power, unsigned terms) {
  Rational s;
  for (unsigned k = 0; k < terms; ++k) {
    Rational t(Integer(1), ipow(first + k, power));
    if (k % 2 == 0) s += t; else s -= t;
  }
  return s;
}

}  // namespace zetalab

#endif  // ZETALAB_ZETA_ALTERNATING_HPP
