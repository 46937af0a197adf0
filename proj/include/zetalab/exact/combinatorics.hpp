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

#ifndef ZETALAB_EXACT_COMBINATORICS_HPP
#define ZETALAB_EXACT_COMBINATORICS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zetalab/exact/rational.hpp"

namespace zetalab {

inline Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

/// C(n, r); r > n is a domain error rather than zero.
inline Integer binomial(unsigned long n, unsigned long r) {
  if (r > n) throw std::domain_error("binomial: r > n");
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

/// Row n of Pascal's triangle, C(n, 0) .. C(n, n).
inline std::vector<Integer> binomial_row(unsigned long n) {
  std::vector<Integer> row(n + 1);
  row[0] = 1;
  for (unsigned long r = 1; r <= n; ++r) row[r] = row[r - 1] * (n - r + 1) / r;
  return row;
}

/// Rising factorial s (s+1) ... (s+count-1).
inline Integer rising_factorial(unsigned long s, unsigned long count) {
  Integer r = 1;
  for (unsigned long i = 0; i < count; ++i) r *= s + i;
  return r;
}

}  // namespace zetalab

#endif  // ZETALAB_EXACT_COMBINATORICS_HPP
