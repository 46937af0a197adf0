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

#ifndef ZETALAB_EXACT_LCM_TABLE_HPP
#define ZETALAB_EXACT_LCM_TABLE_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetalab/exact/primes.hpp"
#include "zetalab/exact/rational.hpp"

namespace zetalab {

/// d_n = lcm(1, ..., n) for 1 <= n <= max_n.
///
/// Built incrementally: d_{n} = p d_{n-1} when n = p^gamma, otherwise
/// d_n = d_{n-1}. Immutable and cheap to copy (values are shared).
class LcmTable {
 public:
  explicit LcmTable(std::uint64_t max_n) : max_n_(max_n) {
    if (max_n == 0) throw std::domain_error("LcmTable: max_n must be >= 1");
    auto values = std::make_shared<std::vector<Integer>>();
    values->reserve(max_n);
    values->emplace_back(1);
    for (std::uint64_t n = 2; n <= max_n; ++n) {
      const auto pp = is_prime_power(n);
      values->push_back(pp ? values->back() * static_cast<unsigned long>(pp->p) : values->back());
    }
    values_ = std::move(values);
  }

  std::uint64_t max_n() const { return max_n_; }

  const Integer& operator[](std::uint64_t n) const { return (*values_)[n - 1]; }

  const Integer& at(std::uint64_t n) const {
    if (n == 0 || n > max_n_)
      throw std::out_of_range("LcmTable: n=" + std::to_string(n) + " outside [1, " +
                              std::to_string(max_n_) + "]");
    return (*values_)[n - 1];
  }

 private:
  std::uint64_t max_n_;
  std::shared_ptr<const std::vector<Integer>> values_;
};

inline LcmTable lcm_table(std::uint64_t max_n) { return LcmTable(max_n); }

}  // namespace zetalab

#endif  // ZETALAB_EXACT_LCM_TABLE_HPP
