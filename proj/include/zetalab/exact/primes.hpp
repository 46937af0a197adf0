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

#ifndef ZETALAB_EXACT_PRIMES_HPP
#define ZETALAB_EXACT_PRIMES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace zetalab {

/// Deterministic trial-division primality test. Intended for the table
/// range (n up to a few million), where it is exact and fast enough.
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

struct PrimePower {
  std::uint64_t p = 0;
  unsigned gamma = 0;

  friend constexpr bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Returns (p, gamma) with n = p^gamma, or nothing when n has two distinct
/// prime factors.
constexpr std::optional<PrimePower> is_prime_power(std::uint64_t n) {
  if (n < 2) throw std::domain_error("is_prime_power: n must be >= 2");
  std::uint64_t p = 0;
  if (n % 2 == 0) {
    p = 2;
  } else {
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) p = n;
  }
  // The smallest factor found above is prime by construction.
  unsigned gamma = 0;
  while (n % p == 0) {
    n /= p;
    ++gamma;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, gamma};
}

}  // namespace zetalab

#endif  // ZETALAB_EXACT_PRIMES_HPP
