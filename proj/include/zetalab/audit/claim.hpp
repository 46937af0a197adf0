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

#ifndef ZETALAB_AUDIT_CLAIM_HPP
#define ZETALAB_AUDIT_CLAIM_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/exact/rational.hpp"

#include <mpfr.h>
#include "zetalab/quad/tanh_sinh.hpp"

namespace zetalab {

enum class Verdict { kHolds, kFails, kUndecided, kVacuous };

/// How a verdict was reached: exact integer/rational arithmetic, certified
/// interval arithmetic, or an exact sweep over an explicit finite window
/// standing in for an "all n" statement.
enum class Provenance { kExact, kCertified, kFiniteRange };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    case Verdict::kUndecided: return "undecided";
    case Verdict::kVacuous: return "vacuous";
  }
  return "?";
}

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::kExact: return "exact";
    case Provenance::kCertified: return "certified";
    case Provenance::kFiniteRange: return "finite-range";
  }
  return "?";
}

struct ClaimID {
  std::string key;
  friend auto operator<=>(const ClaimID&, const ClaimID&) = default;
};

struct ClaimParams {
  std::optional<unsigned long> n;
  std::optional<int> m;
  std::optional<Rational> rational;
};

struct ClaimReport {
  ClaimID claim;
  ClaimParams params;
  Verdict verdict = Verdict::kUndecided;
  std::string lhs;
  std::string rhs;
  Provenance provenance = Provenance::kExact;
  std::string note;
  int precision_bits = 0;  // 0 for exact reports
  bool escalated = false;

  bool holds() const { return verdict == Verdict::kHolds || verdict == Verdict::kVacuous; }
};

struct AuditTrace {
  std::vector<ClaimReport> reports;
  std::optional<ClaimID> first_failure;
  std::optional<std::size_t> first_failure_index;
};

inline AuditTrace make_trace(std::vector<ClaimReport> reports) {
  AuditTrace trace{std::move(reports), std::nullopt, std::nullopt};
  const auto it = std::find_if(trace.reports.begin(), trace.reports.end(),
                               [](const ClaimReport& r) { return !r.holds(); });
  if (it != trace.reports.end()) {
    trace.first_failure = it->claim;
    trace.first_failure_index = static_cast<std::size_t>(it - trace.reports.begin());
  }
  return trace;
}

/// Exact fraction text for a rational witness. Very long fractions are
/// shown as a 40-digit decimal plus their size, to keep reports readable.
inline std::string rational_text(const Rational& q, std::size_t max_chars = 400) {
  std::string s = q.str();
  if (s.size() <= max_chars) return s;
  mpfr_t x;
  mpfr_init2(x, 160);
  mpfr_set_q(x, q.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, 40, x, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  mpfr_clear(x);
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  return sign + mant.substr(0, 1) + "." + mant.substr(1) + "e" + std::to_string(static_cast<long>(e) - 1) +
         " (exact fraction, " + std::to_string(s.size()) + " chars)";
}

/// Precision and effort settings shared by every checker.
struct PrecisionPolicy {
  int precision_bits = 192;
  int precision_cap = 4096;
  QuadratureOptions quadrature;
  /// Largest d_n for which the Diophantine cases are also scanned by brute
  /// force next to the closed-form solution.
  unsigned long brute_force_cap = 1UL << 28;
};

/// Outcome of one attempt at a given precision. An empty `holds` means the
/// certified intervals were not separated and precision should go up.
struct Decision {
  std::optional<bool> holds;
  std::string lhs;
  std::string rhs;
  std::string note;
};

inline ClaimReport exact_report(std::string key, ClaimParams params, bool holds, std::string lhs,
                                std::string rhs, std::string note = {},
                                Provenance provenance = Provenance::kExact) {
  ClaimReport r;
  r.claim = ClaimID{std::move(key)};
  r.params = std::move(params);
  r.verdict = holds ? Verdict::kHolds : Verdict::kFails;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.provenance = provenance;
  r.note = std::move(note);
  return r;
}

inline ClaimReport vacuous_report(std::string key, ClaimParams params, std::string note) {
  ClaimReport r;
  r.claim = ClaimID{std::move(key)};
  r.params = std::move(params);
  r.verdict = Verdict::kVacuous;
  r.provenance = Provenance::kFiniteRange;
  r.note = std::move(note);
  return r;
}

/// Runs `attempt(bits)` from the policy precision upward, doubling until the
/// claim is decided or the cap is reached.
template <class Attempt>
ClaimReport decide_certified(std::string key, ClaimParams params, const PrecisionPolicy& policy,
                             Attempt&& attempt) {
  ClaimReport r;
  r.claim = ClaimID{std::move(key)};
  r.params = std::move(params);
  r.provenance = Provenance::kCertified;
  int bits = policy.precision_bits;
  for (;;) {
    Decision d = attempt(bits);
    r.lhs = std::move(d.lhs);
    r.rhs = std::move(d.rhs);
    r.note = std::move(d.note);
    r.precision_bits = bits;
    r.escalated = bits != policy.precision_bits;
    if (d.holds) {
      r.verdict = *d.holds ? Verdict::kHolds : Verdict::kFails;
      return r;
    }
    if (bits * 2 > policy.precision_cap) break;
    bits *= 2;
  }
  r.verdict = Verdict::kUndecided;
  if (!r.note.empty()) r.note += "; ";
  r.note += "undecided: precision escalated to cap " + std::to_string(bits) + " bits";
  return r;
}

/// Both parts of a conjunction must be decided true for the whole to hold;
/// a single decided false decides it false.
inline std::optional<bool> all_of(std::initializer_list<std::optional<bool>> parts) {
  bool undecided = false;
  for (const auto& p : parts) {
    if (p && !*p) return false;
    if (!p) undecided = true;
  }
  if (undecided) return std::nullopt;
  return true;
}

}  // namespace zetalab

#endif  // ZETALAB_AUDIT_CLAIM_HPP
