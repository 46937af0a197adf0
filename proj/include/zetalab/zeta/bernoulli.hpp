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

#ifndef ZETALAB_ZETA_BERNOULLI_HPP
#define ZETALAB_ZETA_BERNOULLI_HPP

#include <mutex>
#include <stdexcept>
#include <vector>

#include "zetalab/exact/rational.hpp"

namespace zetalab {

/// Tangent numbers T_1..T_count via the in-place integer recurrence of
/// Brent and Harvey.
inline std::vector<Integer> tangent_numbers(unsigned count) {
  std::vector<Integer> t(count + 1);
  if (count == 0) return t;
  t[1] = 1;
  for (unsigned k = 2; k <= count; ++k) t[k] = (k - 1) * t[k - 1];
  for (unsigned k = 2; k <= count; ++k)
    for (unsigned j = k; j <= count; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
  return t;
}

/// B_{2k} for k >= 1, exactly. Results are cached and grown on demand.
inline Rational bernoulli_even(unsigned k) {
  if (k == 0) throw std::domain_error("bernoulli_even: k must be >= 1");
  static std::mutex mu;
  static std::vector<Rational> cache;  // cache[k-1] = B_{2k}
  std::lock_guard lock(mu);
  if (cache.size() < k) {
    const unsigned count = std::max<unsigned>(k, 2 * static_cast<unsigned>(cache.size()));
    const auto t = tangent_numbers(count);
    cache.clear();
    for (unsigned i = 1; i <= count; ++i) {
      // B_{2i} = (-1)^(i-1) 2i T_i / (4^i (4^i - 1))
      const Integer four_i = pow2(2 * i);
      Rational b(Integer(2 * i) * t[i], four_i * (four_i - 1));
      cache.push_back(i % 2 == 1 ? b : -b);
    }
  }
  return cache[k - 1];
}

}  // namespace zetalab

#endif  // ZETALAB_ZETA_BERNOULLI_HPP
