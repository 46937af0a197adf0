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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support/test_oracles.hpp"
#include "zetalab/audit/chain.hpp"
#include "zetalab/audit/checks.hpp"
#include "zetalab/audit/diophantine.hpp"
#include "zetalab/audit/registry.hpp"

namespace {

using namespace zetalab;

bool all_hold(const std::vector<ClaimReport>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const ClaimReport& r) { return r.verdict == Verdict::kHolds; });
}

std::string first_bad(const std::vector<ClaimReport>& rows) {
  for (const auto& r : rows)
    if (r.verdict != Verdict::kHolds)
      return r.claim.key + " n=" + (r.params.n ? std::to_string(*r.params.n) : "-") + " " + r.note;
  return "";
}

std::string fingerprint(const AuditTrace& t) {
  std::string out;
  for (const auto& r : t.reports)
    out += r.claim.key + "|" + (r.params.n ? std::to_string(*r.params.n) : "") + "|" + to_string(r.verdict) +
           "|" + r.lhs + "|" + r.rhs + "|" + r.note + "|" + std::to_string(r.precision_bits) + "\n";
  return out;
}

TEST(Diophantine, Examples) {
  const auto t = lcm_table(12);
  // n = 1: d = 1, a/b = 1 gives k = 1 (2 - 1 = 1).
  auto cases = diophantine_enumerate(1, Integer(1), Integer(1), t);
  ASSERT_EQ(cases.size(), 2u);
  EXPECT_FALSE(cases[0].equality_holds);
  EXPECT_TRUE(cases[1].equality_holds && cases[1].divisibility_holds);
  // a = 2b - 1 with b = d_4 = 12 puts the solution at k = 1.
  cases = diophantine_enumerate(4, Integer(23), Integer(12), t);
  for (const auto& c : cases) EXPECT_EQ(c.equality_holds, c.k == 1) << c.k;
  EXPECT_TRUE(cases[1].divisibility_holds);
  // 21/20 at n = 3: 6*19/20 is not an integer.
  cases = diophantine_enumerate(3, Integer(21), Integer(20), t);
  EXPECT_TRUE(std::none_of(cases.begin(), cases.end(), [](const auto& c) { return c.equality_holds; }));
  EXPECT_THROW(diophantine_enumerate(3, Integer(4), Integer(2), t), std::domain_error);
}

// 200 seeded rationals: the enumeration agrees with a scan done here.
TEST(Diophantine, EnumerationMatchesBruteScan) {
  std::mt19937_64 rng(7);
  const auto t = lcm_table(15);
  for (int i = 0; i < 200; ++i) {
    const unsigned long n = 1 + rng() % 15;
    unsigned long a = 0, b = 0;
    do {
      b = 4 + rng() % 47;
      a = b + 1 + rng() % (b / 4);
    } while (std::gcd(a, b) != 1);
    const auto got = diophantine_enumerate(n, Integer(a), Integer(b), t);
    const auto ref = testing_oracles::brute_cases(t[n].get_ui(), a, b);
    ASSERT_EQ(got.size(), ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) {
      EXPECT_EQ(got[k].k, std::get<0>(ref[k]));
      EXPECT_EQ(got[k].divisibility_holds, std::get<1>(ref[k]));
      EXPECT_EQ(got[k].equality_holds, std::get<2>(ref[k]));
    }
  }
}

TEST(Diophantine, SummaryExactMatchesBrute) {
  std::mt19937_64 rng(11);
  const auto t = lcm_table(14);
  for (int i = 0; i < 300; ++i) {
    const unsigned long n = 1 + rng() % 14;
    const unsigned long b = 1 + rng() % 200;
    const unsigned long a = 1 + rng() % 400;
    if (std::gcd(a, b) != 1) continue;
    const Integer hi = t[n] + static_cast<unsigned long>(rng() % 5);
    const auto ex = summarize_cases_exact(n, Integer(a), Integer(b), t, Integer(0), hi);
    const auto br = summarize_cases_brute(n, Integer(a), Integer(b), t, Integer(0), hi);
    EXPECT_EQ(ex.both, br.both);
    EXPECT_EQ(ex.equality_only, br.equality_only);
    EXPECT_EQ(ex.divisible_count, br.divisible_count);
  }
}

TEST(Diophantine, InductionCases) {
  const auto t = lcm_table(20);
  // n + 1 = 4 = 2^2: case 2.
  auto r = induction_step_audit(3, Integer(83), Integer(80), t);
  EXPECT_EQ(r.claim.key, "case2");
  // n + 1 = 6: case 1, d unchanged.
  r = induction_step_audit(5, Integer(83), Integer(80), t);
  EXPECT_EQ(r.claim.key, "case1");
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  // 10/9: S_9 = {2240} but S_8 is empty, so no l in S_9 comes from S_8.
  r = induction_step_audit(8, Integer(10), Integer(9), t);
  EXPECT_EQ(r.claim.key, "case2");
  EXPECT_EQ(r.verdict, Verdict::kFails);
  const auto nine = diophantine_enumerate(9, Integer(10), Integer(9), t);
  std::vector<Integer> both;
  for (const auto& c : nine)
    if (c.equality_holds && c.divisibility_holds) both.push_back(c.k);
  EXPECT_EQ(format_set(both), "{2240}");
  EXPECT_NE(r.note.find("2240"), std::string::npos) << r.note;
  EXPECT_THROW(induction_step_audit(20, Integer(83), Integer(80), t), std::out_of_range);
}

// Each step is exactly one of: n+1 a prime power and d grows by p, or not
// and d is unchanged.
TEST(Diophantine, CaseDichotomy) {
  const auto t = lcm_table(2001);
  for (unsigned long n = 1; n <= 2000; ++n) {
    const auto pp = is_prime_power(n + 1);
    if (pp) {
      EXPECT_EQ(t[n + 1], t[n] * static_cast<unsigned long>(pp->p));
    } else {
      EXPECT_EQ(t[n + 1], t[n]);
    }
  }
}

TEST(Checks, DnGrowth) {
  CheckContext ctx;
  const auto rows = check_dn_growth(40, ctx);
  EXPECT_TRUE(all_hold(rows)) << first_bad(rows);
  bool saw = false;
  for (const auto& r : rows)
    if (r.claim.key == "eq8" && r.params.n == 9u) {
      saw = true;
      EXPECT_NE(r.lhs.find("6350400"), std::string::npos) << r.lhs;
      EXPECT_EQ(r.provenance, Provenance::kExact);
      EXPECT_EQ(r.precision_bits, 0);
    }
  EXPECT_TRUE(saw);
}

TEST(Checks, IntegralBounds) {
  CheckContext ctx;
  auto rows = check_integral_bounds(12, 2, ctx);
  EXPECT_TRUE(all_hold(rows)) << first_bad(rows);
  rows = check_integral_bounds(6, 3, ctx);
  EXPECT_TRUE(all_hold(rows)) << first_bad(rows);
}

TEST(Checks, FloorClaims) {
  CheckContext ctx;
  auto rows = check_floor_claims(12, 2, ctx);
  EXPECT_TRUE(all_hold(rows)) << first_bad(rows);
  rows = check_floor_claims(6, 4, ctx);
  EXPECT_TRUE(all_hold(rows)) << first_bad(rows);
}

TEST(Checks, LemmaSeriesMajorant) {
  CheckContext ctx;
  for (unsigned long n = 1; n <= 5; ++n) {
    EXPECT_EQ(check_lemma(n, 2, "eq28", ctx).verdict, Verdict::kHolds);
    EXPECT_EQ(check_series(n, 3, "eq73", ctx).verdict, Verdict::kHolds);
    EXPECT_EQ(check_majorant(n, 2, "eq19", ctx.policy()).verdict, Verdict::kHolds);
  }
  EXPECT_EQ(check_log_moment(3, ctx.policy()).verdict, Verdict::kHolds);
  EXPECT_EQ(check_log_moment_zeta(3, "eq60", ctx.policy()).verdict, Verdict::kHolds);
  EXPECT_EQ(check_zeta_range(5, "zeta_range", ctx.policy()).verdict, Verdict::kHolds);
}

// Raising the precision never flips a decided verdict.
TEST(Checks, VerdictsStableUnderPrecision) {
  PrecisionPolicy lo, hi;
  lo.precision_bits = 128;
  hi.precision_bits = 384;
  CheckContext a(lo), b(hi);
  const auto x = check_integral_bounds(10, 2, a);
  const auto y = check_integral_bounds(10, 2, b);
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].verdict == Verdict::kUndecided || y[i].verdict == Verdict::kUndecided) continue;
    EXPECT_EQ(x[i].verdict, y[i].verdict) << x[i].claim.key;
  }
}

TEST(DecideCertified, EscalatesThenDecides) {
  PrecisionPolicy p;
  p.precision_bits = 128;
  p.precision_cap = 1024;
  int calls = 0;
  auto r = decide_certified("probe", ClaimParams{}, p, [&](int bits) {
    ++calls;
    return Decision{bits >= 512 ? std::optional<bool>(true) : std::nullopt, "l", "r", ""};
  });
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_EQ(r.precision_bits, 512);
  EXPECT_TRUE(r.escalated);
  EXPECT_EQ(calls, 3);
  r = decide_certified("probe", ClaimParams{}, p, [](int) { return Decision{std::nullopt, "", "", ""}; });
  EXPECT_EQ(r.verdict, Verdict::kUndecided);
  EXPECT_EQ(r.precision_bits, 1024);
  EXPECT_NE(r.note.find("cap"), std::string::npos);
}

TEST(Registry, KeysAndScope) {
  const auto k2 = in_scope_keys(2);
  const auto k3 = in_scope_keys(3);
  EXPECT_GT(k2.size(), k3.size());
  EXPECT_NE(std::find(k2.begin(), k2.end(), "eq48"), k2.end());
  EXPECT_EQ(std::find(k3.begin(), k3.end(), "eq48"), k3.end());
  EXPECT_NE(std::find(k3.begin(), k3.end(), "eq100"), k3.end());
  EXPECT_EQ(std::find(k2.begin(), k2.end(), "enum_soundness"), k2.end());
  EXPECT_THROW(registry_entry("nope"), std::out_of_range);
  std::set<std::string> uniq(k2.begin(), k2.end());
  EXPECT_EQ(uniq.size(), k2.size());
}

TEST(Registry, AdmissibleRationals) {
  EXPECT_TRUE(admissible_rational(Integer(83), Integer(80), 2));
  EXPECT_TRUE(admissible_rational(Integer(5), Integer(4), 2));
  EXPECT_FALSE(admissible_rational(Integer(6), Integer(4), 2));
  EXPECT_TRUE(admissible_rational(Integer(1), Integer(1), 2));
  EXPECT_TRUE(admissible_rational(Integer(2), Integer(1), 3));
  EXPECT_FALSE(admissible_rational(Integer(3), Integer(1), 2));
  EXPECT_FALSE(admissible_rational(Integer(5), Integer(4), 3));
  EXPECT_FALSE(admissible_rational(Integer(166), Integer(160), 2));
  EXPECT_THROW(full_chain_audit(Integer(3), Integer(1), 2, 4), std::range_error);
}

TEST(Audit, RationalNearZetaFiveFailsInsideWindow) {
  const auto t = full_chain_audit(Integer(83), Integer(80), 2, 20);
  ASSERT_TRUE(t.first_failure);
  EXPECT_EQ(t.first_failure->key, "eq48");
  const auto& f = t.reports[*t.first_failure_index];
  EXPECT_EQ(f.params.n, 16u);
  std::set<std::string> keys;
  for (const auto& r : t.reports) keys.insert(r.claim.key);
  for (const auto& k : in_scope_keys(2)) EXPECT_TRUE(keys.count(k)) << k;
  // The Theorem 1 window n >= 80 lies beyond n_max.
  for (const auto& r : t.reports)
    if (r.claim.key == "eq46") EXPECT_EQ(r.verdict, Verdict::kVacuous);
  // Canonical order.
  std::size_t last = 0;
  for (const auto& r : t.reports) {
    const auto i = *registry_index(r.claim.key);
    EXPECT_GE(i, last);
    last = i;
  }
}

TEST(Audit, BaseProbe) {
  const auto t = full_chain_audit(Integer(2), Integer(1), 2, 3);
  bool saw = false;
  for (const auto& r : t.reports)
    if (r.claim.key == "eq48_base") {
      saw = true;
      EXPECT_EQ(r.verdict, Verdict::kFails);
    }
  EXPECT_TRUE(saw);
}

TEST(Audit, Deterministic) {
  const auto x = full_chain_audit(Integer(83), Integer(80), 3, 8, {}, 99);
  const auto y = full_chain_audit(Integer(83), Integer(80), 3, 8, {}, 99);
  EXPECT_EQ(fingerprint(x), fingerprint(y));
  CheckContext ctx;
  EXPECT_EQ(enumeration_soundness(5, 50, ctx).verdict, Verdict::kHolds);
}

}  // namespace
