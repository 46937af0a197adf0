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

#ifndef ZETALAB_AUDIT_DIOPHANTINE_HPP
#define ZETALAB_AUDIT_DIOPHANTINE_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetalab/audit/claim.hpp"
#include "zetalab/exact/lcm_table.hpp"

namespace zetalab {

/// One candidate k for d_n a - 2 d_n b = -k b.
struct DiophantineCase {
  unsigned long n = 0;
  Integer k;
  bool divisibility_holds = false;  // d_n | k b
  bool equality_holds = false;      // d_n a - 2 d_n b == -k b
};

inline void require_coprime_positive(const Integer& a, const Integer& b) {
  if (a <= 0 || b <= 0) throw std::domain_error("diophantine: a and b must be positive");
  if (gcd(a, b) != 1) throw std::domain_error("diophantine: gcd(a, b) must be 1");
}

/// Largest d_n for which diophantine_enumerate materializes every case.
inline constexpr unsigned long kMaxMaterializedCases = 1UL << 24;

/// Every k in [0, d_n] with both flags, in increasing k.
inline std::vector<DiophantineCase> diophantine_enumerate(unsigned long n, const Integer& a,
                                                          const Integer& b, const LcmTable& table) {
  require_coprime_positive(a, b);
  const Integer& d = table.at(n);
  if (d > kMaxMaterializedCases)
    throw std::length_error("diophantine_enumerate: d_n too large to materialize");
  const Integer lhs = d * a - 2 * d * b;
  std::vector<DiophantineCase> out;
  out.reserve(d.get_ui() + 1);
  for (Integer k = 0; k <= d; ++k) {
    const Integer kb = k * b;
    out.push_back({n, k, divides(d, kb), lhs == -kb});
  }
  return out;
}

/// Summary of the cases with k in [k_lo, k_hi].
struct CaseSummary {
  unsigned long n = 0;
  Integer d;
  Integer k_lo, k_hi;
  std::vector<Integer> both;            // equality and divisibility
  std::vector<Integer> equality_only;   // equality, whatever divisibility says
  Integer divisible_count;              // #k with d_n | k b
  bool brute_forced = false;
};

namespace detail {

// #{k in [lo, hi] : step | k}, for lo >= 0.
inline Integer multiples_in(const Integer& step, const Integer& lo, const Integer& hi) {
  if (hi < lo) return 0;
  Integer below_lo = lo == 0 ? Integer(-1) : Integer((lo - 1) / step);
  return hi / step - below_lo;
}

}  // namespace detail

/// Closed-form summary: the equality pins k = d_n (2b - a) / b, and d_n | k b
/// holds exactly for multiples of d_n / gcd(d_n, b).
inline CaseSummary summarize_cases_exact(unsigned long n, const Integer& a, const Integer& b,
                                         const LcmTable& table, const Integer& k_lo,
                                         const Integer& k_hi) {
  CaseSummary s;
  s.n = n;
  s.d = table.at(n);
  s.k_lo = k_lo;
  s.k_hi = k_hi;
  const Integer num = s.d * (2 * b - a);
  if (divides(b, num)) {
    const Integer k = num / b;
    if (k >= k_lo && k <= k_hi) {
      s.equality_only.push_back(k);
      if (divides(s.d, k * b)) s.both.push_back(k);
    }
  }
  s.divisible_count = detail::multiples_in(s.d / gcd(s.d, b), k_lo, k_hi);
  return s;
}

/// Brute-force scan of every k in [k_lo, k_hi]. Uses 64-bit arithmetic when
/// all products fit, GMP otherwise.
inline CaseSummary summarize_cases_brute(unsigned long n, const Integer& a, const Integer& b,
                                         const LcmTable& table, const Integer& k_lo,
                                         const Integer& k_hi) {
  CaseSummary s;
  s.n = n;
  s.d = table.at(n);
  s.k_lo = k_lo;
  s.k_hi = k_hi;
  s.brute_forced = true;
  s.divisible_count = 0;
  if (k_hi < k_lo) return s;
  const Integer target = 2 * s.d * b - s.d * a;  // k b must equal this
  const Integer limit = Integer(1) << 62;
  const bool fits = k_hi * b < limit && abs(target) < limit && s.d < limit && k_lo >= 0;
  if (fits) {
    const std::uint64_t d = s.d.get_ui(), bb = b.get_ui();
    const std::int64_t t = target.get_si();
    const std::uint64_t lo = k_lo.get_ui(), hi = k_hi.get_ui();
    std::uint64_t divisible = 0;
    for (std::uint64_t k = lo, kb = lo * bb; k <= hi; ++k, kb += bb) {
      const bool div = kb % d == 0;
      divisible += div;
      if (static_cast<std::int64_t>(kb) == t) {
        s.equality_only.emplace_back(static_cast<unsigned long>(k));
        if (div) s.both.emplace_back(static_cast<unsigned long>(k));
      }
    }
    s.divisible_count = static_cast<unsigned long>(divisible);
    return s;
  }
  for (Integer k = k_lo; k <= k_hi; ++k) {
    const Integer kb = k * b;
    const bool div = divides(s.d, kb);
    if (div) ++s.divisible_count;
    if (kb == target) {
      s.equality_only.push_back(k);
      if (div) s.both.push_back(k);
    }
  }
  return s;
}

/// Closed-form summary, cross-checked by brute force when d_n <= cap.
/// Throws std::logic_error if the two disagree.
inline CaseSummary summarize_cases(unsigned long n, const Integer& a, const Integer& b,
                                   const LcmTable& table, const Integer& k_lo, const Integer& k_hi,
                                   unsigned long brute_force_cap) {
  require_coprime_positive(a, b);
  CaseSummary exact = summarize_cases_exact(n, a, b, table, k_lo, k_hi);
  if (exact.d > brute_force_cap) return exact;
  CaseSummary brute = summarize_cases_brute(n, a, b, table, k_lo, k_hi);
  if (brute.both != exact.both || brute.equality_only != exact.equality_only ||
      brute.divisible_count != exact.divisible_count)
    throw std::logic_error("summarize_cases: brute force disagrees with closed form at n=" +
                           std::to_string(n));
  return brute;
}

inline std::string format_set(const std::vector<Integer>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].get_str();
  }
  return out + "}";
}

/// Checks the induction step from n to n + 1 for the substituted rational
/// a/b. Case 1 (n+1 not a prime power): d_{n+1} = d_n and the satisfiable
/// sets coincide. Case 2 (n+1 = p^gamma): d_{n+1} = p d_n and every
/// satisfiable l at level n+1 maps to l/p in the satisfiable set at level n.
/// Both sets come from independent scans.
inline ClaimReport induction_step_from(unsigned long n, const Integer& a, const Integer& b,
                                       const LcmTable& table, const CaseSummary& level_n,
                                       const CaseSummary& level_n1) {
  const Integer& dn = table[n];
  const Integer& dn1 = table[n + 1];
  const auto pp = is_prime_power(n + 1);
  const bool brute = level_n.brute_forced && level_n1.brute_forced;

  ClaimParams params{n, std::nullopt, Rational(a, b)};
  std::ostringstream note;
  note << (brute ? "sets cross-checked by brute-force scan" : "sets from closed form (d_n above scan cap)");

  if (!pp) {
    const bool d_ok = dn1 == dn;
    const bool sets_ok = level_n1.both == level_n.both;
    note << "; n+1=" << n + 1 << " is not a prime power";
    return exact_report("case1", params, d_ok && sets_ok,
                        "d_{n+1}=" + dn1.get_str() + ", S_{n+1}=" + format_set(level_n1.both),
                        "d_n=" + dn.get_str() + ", S_n=" + format_set(level_n.both), note.str());
  }

  const unsigned long p = static_cast<unsigned long>(pp->p);
  const bool d_ok = dn1 == dn * p;
  std::vector<Integer> unmapped;
  for (const auto& l : level_n1.both) {
    const bool maps = divides(Integer(p), l) &&
                      std::find(level_n.both.begin(), level_n.both.end(), Integer(l / p)) != level_n.both.end();
    if (!maps) unmapped.push_back(l);
  }
  note << "; n+1=" << p << "^" << pp->gamma;
  if (!unmapped.empty()) note << "; l with no image l/p in S_n: " << format_set(unmapped);
  return exact_report("case2", params, d_ok && unmapped.empty(),
                      "d_{n+1}=" + dn1.get_str() + ", S_{n+1}=" + format_set(level_n1.both),
                      "p d_n=" + Integer(dn * p).get_str() + ", S_n=" + format_set(level_n.both),
                      note.str());
}

/// As above, computing both case sets from the table.
inline ClaimReport induction_step_audit(unsigned long n, const Integer& a, const Integer& b,
                                        const LcmTable& table,
                                        unsigned long brute_force_cap = PrecisionPolicy{}.brute_force_cap) {
  if (n < 1 || n + 1 > table.max_n())
    throw std::out_of_range("induction_step_audit: need 1 <= n and n+1 <= table.max_n()");
  require_coprime_positive(a, b);
  return induction_step_from(n, a, b, table,
                             summarize_cases(n, a, b, table, 0, table[n], brute_force_cap),
                             summarize_cases(n + 1, a, b, table, 0, table[n + 1], brute_force_cap));
}

}  // namespace zetalab

#endif  // ZETALAB_AUDIT_DIOPHANTINE_HPP
