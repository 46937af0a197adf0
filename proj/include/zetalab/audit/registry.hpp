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

#ifndef ZETALAB_AUDIT_REGISTRY_HPP
#define ZETALAB_AUDIT_REGISTRY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zetalab/audit/chain.hpp"

namespace zetalab {

/// Which checker family produces a key, and for which m.
enum class Scope {
  kDn,          // d_n growth, no m
  kTheorem1,    // m = 2 only
  kGeneral,     // every m
  kInduction,   // no m
  kAuxiliary,   // not a statement of the argument; optional rows
};

struct RegistryEntry {
  std::string_view key;
  std::string_view anchor;  // the formula the claim is keyed to
  Scope scope;
};

// Canonical claim order; reports are emitted in this order, n ascending
// within a key.
inline constexpr std::array kRegistry = {
    RegistryEntry{"eq3", "∫∫ (−log xy)^s/(1+xy) dxdy = Γ(s+2) η(s+2)", Scope::kGeneral},
    RegistryEntry{"eq4", "∫∫ −log³(xy)/(1+xy) dxdy = 45 ζ(5)/2", Scope::kTheorem1},
    RegistryEntry{"eq5", "0 < I_n ≤ (15/16)(1/4^n) ζ(5)", Scope::kTheorem1},
    RegistryEntry{"eq6", "log d_n < 1.03883 n < (3 log 2/2) n", Scope::kDn},
    RegistryEntry{"eq7", "d_n < e^(3n log 2/2)", Scope::kDn},
    RegistryEntry{"eq8", "d_n < (2√2)^n", Scope::kDn},
    RegistryEntry{"eq10", "1 < ζ(5) ≤ 5/4", Scope::kTheorem1},
    RegistryEntry{"eq11", "0 < d_n I_n < (75/64)(1/2^(n/2))", Scope::kTheorem1},
    RegistryEntry{"eq12", "0 < d_n I_n < 1", Scope::kTheorem1},
    RegistryEntry{"eq19", "Γ(5) Σ_k 1/(n+k+r+1)^5 ≤ 24 Σ_k 1/(k+2)^5 < 24 ζ(5)", Scope::kTheorem1},
    RegistryEntry{"eq22", "I_n = Σ_r (−1)^r C(n,r) Σ_k (−1)^k/(n+k+r+1)^5", Scope::kTheorem1},
    RegistryEntry{"eq28", "I_n = 15 (−1)^n 2^(n−4) ζ(5) + (−1)^(n+1) Σ_r C(n,r) Σ_{k≤n+r} (−1)^(k−1)/k^5",
                  Scope::kTheorem1},
    RegistryEntry{"eq29", "I_2n = 15·2^(2n−4) ζ(5) − Σ_r C(2n,r) Σ_{k≤2n+r} (−1)^(k−1)/k^5", Scope::kTheorem1},
    RegistryEntry{"eq32", "d_n I_2n/(15·2^(2n−4)) = d_n ζ(5) − d_n P_n", Scope::kTheorem1},
    RegistryEntry{"eq33", "{x} + [x] = {d_n ζ(5)} + [d_n ζ(5)] − d_n ({P_n} + [P_n])", Scope::kTheorem1},
    RegistryEntry{"eq34", "d_n I_2n/(15·2^(2n−4)) + d_n {P_n} = d_n ζ(5) − d_n [P_n]", Scope::kTheorem1},
    RegistryEntry{"eq35", "[P_n] = [ζ(5) − I_2n/(15·2^(2n−4))]", Scope::kTheorem1},
    RegistryEntry{"eq36", "[P_n] = 1 + [{ζ(5)} − I_2n/(15·2^(2n−4))]", Scope::kTheorem1},
    RegistryEntry{"eq37", "0 < I_2n/(15·2^(2n−4)) ≤ ζ(5)/64", Scope::kTheorem1},
    RegistryEntry{"eq38", "{ζ(5)} − I_2n/(15·2^(2n−4)) ≥ {ζ(5)} − ζ(5)/64 ≥ (63 {ζ(5)} − 1)/64 > 0",
                  Scope::kTheorem1},
    RegistryEntry{"eq39", "0 < {ζ(5)} − I_2n/(15·2^(2n−4)) < {ζ(5)} < 1", Scope::kTheorem1},
    RegistryEntry{"eq40", "[P_n] = 1", Scope::kTheorem1},
    RegistryEntry{"eq41", "d_n I_2n/(15·2^(2n−4)) + d_n {P_n} = d_n ζ(5) − d_n ∈ ℤ", Scope::kTheorem1},
    RegistryEntry{"eq42", "d_n I_2n/(15·2^(2n−4)) + d_n {P_n} ∈ ℤ", Scope::kTheorem1},
    RegistryEntry{"eq43", "0 < d_n I_2n/(15·2^(2n−4)) + d_n {P_n} < d_n + 1", Scope::kTheorem1},
    RegistryEntry{"eq44", "d_n ζ(5) − d_n = d_n, d_n − 1, ..., 2, 1", Scope::kTheorem1},
    RegistryEntry{"eq45", "d_n ζ(5) − d_n = d_n − k_i, 1 ≤ k_i ≤ d_n − 1", Scope::kTheorem1},
    RegistryEntry{"eq46", "d_n a − 2 d_n b = −k_i b, 1 ≤ k_i ≤ d_n − 1", Scope::kTheorem1},
    RegistryEntry{"eq46_iff", "d_n a − 2 d_n b = −k_i b solvable ⇔ d_n | k_i b", Scope::kTheorem1},
    RegistryEntry{"eq47", "d_n a − 2 d_n b = −k_i b, 1 ≤ k_i ≤ d_n − 1, d_n | k_i b", Scope::kTheorem1},
    RegistryEntry{"eq48", "d_n a − 2 d_n b = −k_i b, 0 ≤ k_i ≤ d_n, d_n | k_i b", Scope::kTheorem1},
    RegistryEntry{"eq48_base", "a − 2b = 0 or −b", Scope::kTheorem1},
    RegistryEntry{"case1", "d_(n+1) = d_n", Scope::kInduction},
    RegistryEntry{"case2", "d_(n+1) = p d_n; l_i b/p = d_n, 2 d_n, ..., d_n b", Scope::kInduction},
    RegistryEntry{"eq60", "∫∫ −log^(2m−1)(xy)/(1+xy) dxdy = ((2^(2m)−1)/2^(2m)) Γ(2m+1) ζ(2m+1)", Scope::kGeneral},
    RegistryEntry{"eq61", "0 < I_(n,m) ≤ (1/4^n)((2^(2m)−1)/2^(2m)) ζ(2m+1)", Scope::kGeneral},
    RegistryEntry{"eq62", "0 < d_n I_(n,m) < (1/2^(n/2)) ζ(2m+1)", Scope::kGeneral},
    RegistryEntry{"zeta_range", "1 < ζ(2m+1) ≤ 1 + 1/(2m)", Scope::kGeneral},
    RegistryEntry{"eq64", "0 < d_n I_(n,m) < (1/2^(n/2))(1 + 1/(2m))", Scope::kGeneral},
    RegistryEntry{"eq64_unit", "0 < d_n I_(n,m) < 1", Scope::kGeneral},
    RegistryEntry{"eq71", "Γ(2m+1) Σ_k 1/(n+k+s+1)^(2m+1) < Γ(2m+1) ζ(2m+1)", Scope::kGeneral},
    RegistryEntry{"eq73", "I_(n,m) = Σ_s (−1)^s C(n,s) Σ_k (−1)^k/(n+k+s+1)^(2m+1)", Scope::kGeneral},
    RegistryEntry{"eq81",
                  "I_(n,m) = (−1)^n (2^(2m)−1) 2^(n−2m) ζ(2m+1) + (−1)^(n+1) Σ_s C(n,s) Σ_{k≤n+s} (−1)^(k−1)/k^(2m+1)",
                  Scope::kGeneral},
    RegistryEntry{"eq82", "I_(2n,m) = (2^(2m)−1) 2^(2n−2m) ζ(2m+1) − Σ_s C(2n,s) Σ_{k≤2n+s} (−1)^(k−1)/k^(2m+1)",
                  Scope::kGeneral},
    RegistryEntry{"eq85", "d_n I_(2n,m)/((2^(2m)−1) 2^(2n−2m)) = d_n ζ(2m+1) − d_n P*_(n,m)", Scope::kGeneral},
    RegistryEntry{"eq86", "{x} + [x] = {d_n ζ(2m+1)} + [d_n ζ(2m+1)] − d_n ({P*_(n,m)} + [P*_(n,m)])",
                  Scope::kGeneral},
    RegistryEntry{"eq87", "d_n I_(2n,m)/((2^(2m)−1) 2^(2n−2m)) + d_n {P*_(n,m)} = d_n ζ(2m+1) − d_n [P*_(n,m)]",
                  Scope::kGeneral},
    RegistryEntry{"eq88", "[P*_(n,m)] = [ζ(2m+1) − I_(2n,m)/((2^(2m)−1) 2^(2n−2m))]", Scope::kGeneral},
    RegistryEntry{"eq89", "[P*_(n,m)] = 1 + [{ζ(2m+1)} − I_(2n,m)/((2^(2m)−1) 2^(2n−2m))]", Scope::kGeneral},
    RegistryEntry{"eq90", "lim I_(2n,m)/((2^(2m)−1) 2^(2n−2m)) = 0", Scope::kGeneral},
    RegistryEntry{"eq91", "0 < I_(2n,m)/((2^(2m)−1) 2^(2n−2m)) < {ζ(2m+1)}", Scope::kGeneral},
    RegistryEntry{"eq91_N", "n ≥ max{b, N}", Scope::kGeneral},
    RegistryEntry{"eq92", "0 < {ζ(2m+1)} − I_(2n,m)/((2^(2m)−1) 2^(2n−2m)) < {ζ(2m+1)} < 1", Scope::kGeneral},
    RegistryEntry{"eq93", "[P*_(n,m)] = 1", Scope::kGeneral},
    RegistryEntry{"eq94", "d_n I_(2n,m)/((2^(2m)−1) 2^(2n−2m)) + d_n {P*_(n,m)} = d_n ζ(2m+1) − d_n ∈ ℤ",
                  Scope::kGeneral},
    RegistryEntry{"eq95", "d_n I_(2n,m)/((2^(2m)−1) 2^(2n−2m)) + d_n {P*_(n,m)} ∈ ℤ", Scope::kGeneral},
    RegistryEntry{"eq96", "0 < d_n I_(2n,m)/((2^(2m)−1) 2^(2n−2m)) + d_n {P*_(n,m)} < d_n + 1", Scope::kGeneral},
    RegistryEntry{"eq97", "d_n ζ(2m+1) − d_n = d_n, d_n − 1, ..., 2, 1", Scope::kGeneral},
    RegistryEntry{"eq98", "d_n a − 2 d_n b = −k*_i b, 1 ≤ k*_i ≤ d_n − 1", Scope::kGeneral},
    RegistryEntry{"eq98_iff", "d_n a − 2 d_n b = −k*_i b solvable ⇔ d_n | k*_i b", Scope::kGeneral},
    RegistryEntry{"eq99", "d_n a − 2 d_n b = −k*_i b, 1 ≤ k*_i ≤ d_n − 1, d_n | k*_i b", Scope::kGeneral},
    RegistryEntry{"eq100", "d_n a − 2 d_n b = −k*_i b, 0 ≤ k*_i ≤ d_n, d_n | k*_i b", Scope::kGeneral},
    RegistryEntry{"eq100_base", "a − 2b = 0 or −b", Scope::kGeneral},
    RegistryEntry{"enum_soundness", "case list = brute-force scan over 0 ≤ k ≤ d_n", Scope::kAuxiliary},
};

inline std::optional<std::size_t> registry_index(std::string_view key) {
  for (std::size_t i = 0; i < kRegistry.size(); ++i)
    if (kRegistry[i].key == key) return i;
  return std::nullopt;
}

inline const RegistryEntry& registry_entry(std::string_view key) {
  const auto i = registry_index(key);
  if (!i) throw std::out_of_range("unregistered claim key: " + std::string(key));
  return kRegistry[*i];
}

/// Keys a full audit at this m must produce.
inline std::vector<std::string> in_scope_keys(int m) {
  std::vector<std::string> out;
  for (const auto& e : kRegistry) {
    if (e.scope == Scope::kAuxiliary) continue;
    if (e.scope == Scope::kTheorem1 && m != 2) continue;
    out.emplace_back(e.key);
  }
  return out;
}

/// Stable reorder into registry order; throws on an unregistered key.
inline void sort_canonical(std::vector<ClaimReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const ClaimReport& x, const ClaimReport& y) {
    return *registry_index(x.claim.key) < *registry_index(y.claim.key);
  });
}

/// a/b is admissible when 1 < a/b <= 1 + 1/(2m), the range the zeta bounds
/// allow, or when it is one of the integer base-case probes 1 and 2.
inline bool admissible_rational(const Integer& a, const Integer& b, int m) {
  if (a <= 0 || b <= 0 || gcd(a, b) != 1) return false;
  const Rational q(a, b);
  if (q == Rational(1) || q == Rational(2)) return true;
  return q > Rational(1) && q <= Rational(1) + Rational(Integer(1), Integer(2 * m));
}

/// Seeded sweep: for `samples` random (n <= 15, b <= 50, a coprime,
/// 1 < a/b <= 5/4) the materialized case list must match an independent
/// brute-force scan. One summary row, key "enum_soundness".
inline ClaimReport enumeration_soundness(std::uint64_t seed, int samples, CheckContext& ctx) {
  std::mt19937_64 rng(seed);
  const LcmTable& table = ctx.table(15);
  int mismatches = 0;
  std::string first;
  for (int i = 0; i < samples; ++i) {
    const unsigned long n = 1 + rng() % 15;
    Integer a, b;
    do {
      b = 1 + static_cast<unsigned long>(rng() % 50);
      // a in (b, 5b/4]
      const unsigned long span = static_cast<unsigned long>(Integer(b / 4).get_ui());
      if (span == 0) continue;
      a = b + 1 + static_cast<unsigned long>(rng() % span);
    } while (b < 4 || gcd(a, b) != 1);
    const auto cases = diophantine_enumerate(n, a, b, table);
    const CaseSummary brute = summarize_cases_brute(n, a, b, table, 0, table[n]);
    std::vector<Integer> both, eq;
    Integer divisible = 0;
    for (const auto& c : cases) {
      if (c.divisibility_holds) ++divisible;
      if (c.equality_holds) eq.push_back(c.k);
      if (c.equality_holds && c.divisibility_holds) both.push_back(c.k);
    }
    if (both != brute.both || eq != brute.equality_only || divisible != brute.divisible_count) {
      if (mismatches++ == 0) first = "n=" + std::to_string(n) + " a/b=" + Rational(a, b).str();
    }
  }
  ClaimParams params;
  return exact_report("enum_soundness", params, mismatches == 0, std::to_string(mismatches) + " mismatches",
                      std::to_string(samples) + " samples",
                      "seed " + std::to_string(seed) + (first.empty() ? "" : "; first mismatch " + first));
}

/// Substitutes zeta(2m+1) := a/b into every claim of the chain and runs
/// the remaining checks with certified values, for n = 1..n_max.
/// Throws std::range_error for an inadmissible rational.
inline AuditTrace full_chain_audit(const Integer& a, const Integer& b, int m, unsigned long n_max,
                                   const PrecisionPolicy& policy = {},
                                   std::optional<std::uint64_t> seed = std::nullopt) {
  if (m < 2) throw std::domain_error("full_chain_audit: m must be >= 2");
  if (n_max < 1) throw std::domain_error("full_chain_audit: n_max must be >= 1");
  if (!admissible_rational(a, b, m))
    throw std::range_error("full_chain_audit: " + a.get_str() + "/" + b.get_str() +
                           " must be coprime with 1 < a/b <= 1 + 1/(2m), or one of 1, 2");
  CheckContext ctx(policy, n_max + 1);
  std::vector<ClaimReport> out;
  auto append = [&](std::vector<ClaimReport> rows) {
    std::move(rows.begin(), rows.end(), std::back_inserter(out));
  };

  append(check_dn_growth(n_max, ctx));
  if (m == 2) out.push_back(check_zeta_range(2, "eq10", policy));
  out.push_back(check_zeta_range(m, "zeta_range", policy));
  for (unsigned s = 1; s <= static_cast<unsigned>(2 * m - 1); ++s) out.push_back(check_log_moment(s, policy));
  if (m == 2) out.push_back(check_log_moment_zeta(2, "eq4", policy));
  out.push_back(check_log_moment_zeta(m, "eq60", policy));
  append(check_integral_bounds(n_max, m, ctx));
  for (unsigned long n = 1; n <= n_max; ++n) {
    if (m == 2) {
      out.push_back(check_majorant(n, 2, "eq19", policy));
      out.push_back(check_series(n, 2, "eq22", ctx));
      out.push_back(check_lemma(n, 2, "eq28", ctx));
    }
    out.push_back(check_majorant(n, m, "eq71", policy));
    out.push_back(check_series(n, m, "eq73", ctx));
    out.push_back(check_lemma(n, m, "eq81", ctx));
  }
  auto floor_rows = check_floor_claims(n_max, m, ctx);
  unsigned long threshold = n_max + 1;
  for (const auto& r : floor_rows)
    if (r.claim.key == "eq91_N" && r.verdict == Verdict::kHolds && r.params.n) threshold = *r.params.n;
  append(std::move(floor_rows));

  const unsigned long b_window = b.fits_ulong_p() ? b.get_ui() : n_max + 1;
  if (m == 2) append(check_chain(a, b, 2, n_max, b_window, kTheorem1Keys, ctx));
  append(check_chain(a, b, m, n_max, std::max(b_window, threshold), kTheorem2Keys, ctx));
  append(check_induction(a, b, n_max, ctx));
  if (seed) out.push_back(enumeration_soundness(*seed, 200, ctx));

  for (auto& r : out)
    if (!r.params.rational) r.params.rational = Rational(a, b);
  sort_canonical(out);
  return make_trace(std::move(out));
}

}  // namespace zetalab

#endif  // ZETALAB_AUDIT_REGISTRY_HPP
