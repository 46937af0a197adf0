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

#ifndef ZETALAB_CLI_COMMANDS_HPP
#define ZETALAB_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

#include "zetalab/audit/registry.hpp"
#include "zetalab/cli/config.hpp"
#include "zetalab/cli/report.hpp"

namespace zetalab::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

inline int digits_for(int bits) { return std::max(20, static_cast<int>(bits * 0.30103) - 2); }

/// Closed form against both oracles for n = 1..n_max and each m.
inline int cmd_lemma(const RunConfig& cfg, std::ostream& os) {
  cfg.validate();
  const auto ms = cfg.m_or({2});
  CheckContext ctx(cfg.policy(), cfg.n_max + 1);
  std::vector<ClaimReport> rows;
  for (int m : ms)
    for (unsigned long n = 1; n <= cfg.n_max; ++n) rows.push_back(check_lemma(n, m, m == 2 ? "eq28" : "eq81", ctx));
  const AuditTrace trace = make_trace(std::move(rows));
  write_output(os, "lemma", cfg, ms, nullptr, trace);
  return tally(trace.reports).all_hold() ? kExitOk : kExitClaimFailed;
}

/// d_n growth for n <= n_max; with --m also the zeta range, the integral
/// bounds and the floor claims for each m.
inline int cmd_bounds(const RunConfig& cfg, std::ostream& os) {
  cfg.validate();
  const auto ms = cfg.m_or({});
  CheckContext ctx(cfg.policy(), cfg.n_max + 1);
  std::vector<ClaimReport> rows = check_dn_growth(cfg.n_max, ctx);
  auto append = [&](std::vector<ClaimReport> more) { std::move(more.begin(), more.end(), std::back_inserter(rows)); };
  for (int m : ms) {
    if (m == 2) rows.push_back(check_zeta_range(2, "eq10", ctx.policy()));
    rows.push_back(check_zeta_range(m, "zeta_range", ctx.policy()));
    append(check_integral_bounds(cfg.n_max, m, ctx));
    append(check_floor_claims(cfg.n_max, m, ctx));
  }
  sort_canonical(rows);
  const AuditTrace trace = make_trace(std::move(rows));
  write_output(os, "bounds", cfg, ms, nullptr, trace);
  return tally(trace.reports).all_hold() ? kExitOk : kExitClaimFailed;
}

/// Full chain audit with zeta(2m+1) := a/b. Exit 0 once the trace is
/// written, whatever the verdicts; 2 for a missing or inadmissible rational.
inline int cmd_audit(const RunConfig& cfg, std::ostream& os) {
  cfg.validate();
  if (!cfg.rational) throw UsageError("audit: --rational a/b is required");
  const auto ms = cfg.m_or({2});
  const Integer a = cfg.rational->numerator(), b = cfg.rational->denominator();
  for (int m : ms)
    if (!admissible_rational(a, b, m))
      throw UsageError("audit: " + cfg.rational->str() + " is outside (1, 1 + 1/(2m)] for m = " +
                       std::to_string(m) + " and is not a base-case probe (1 or 2)");
  std::vector<ClaimReport> rows;
  for (int m : ms) {
    AuditTrace t = full_chain_audit(a, b, m, cfg.n_max, cfg.policy(), cfg.seed);
    std::move(t.reports.begin(), t.reports.end(), std::back_inserter(rows));
  }
  sort_canonical(rows);
  write_output(os, "audit", cfg, ms, nullptr, make_trace(std::move(rows)));
  return kExitOk;
}

/// Certified zeta(2m+1), eta(2m+1) and {zeta(2m+1)}, with the range claims.
inline int cmd_zeta(const RunConfig& cfg, std::ostream& os) {
  cfg.validate();
  const auto ms = cfg.m_or({2});
  const int bits = cfg.precision_bits;
  const PrecisionPolicy policy = cfg.policy();
  ValueTable values{{"m", "zeta", "eta", "frac", "frac_gt_1_63"}, {}};
  std::vector<ClaimReport> rows;
  for (int m : ms) {
    const CertifiedReal z = zeta_value(m, bits);
    const CertifiedReal e = eta_value(m, bits);
    const CertifiedReal frac = z - Rational(1);
    std::string flag = "n/a";
    if (const auto fl = z.floor(); fl && *fl == 1) {
      const auto gt = frac.greater_than(Rational(1, 63));
      flag = gt ? (*gt ? "true" : "false") : "undecided";
    }
    values.rows.push_back({std::to_string(m), z.str(digits_for(bits)), e.str(digits_for(bits)),
                           frac.str(digits_for(bits)), flag});
    if (m == 2) rows.push_back(check_zeta_range(2, "eq10", policy));
    rows.push_back(check_zeta_range(m, "zeta_range", policy));
  }
  sort_canonical(rows);
  write_output(os, "zeta", cfg, ms, &values, make_trace(std::move(rows)));
  return kExitOk;
}

/// Direct evaluation of I_{n,m}: closed form, quadrature and series.
/// Exit 1 if an oracle fails or the three disagree.
inline int cmd_oracle(const RunConfig& cfg, std::ostream& os) {
  cfg.validate();
  const auto ms = cfg.m_or({2});
  const int bits = cfg.precision_bits;
  ValueTable values{{"n", "m", "closed_form", "quadrature", "levels", "series", "agree"}, {}};
  bool ok = true;
  for (int m : ms) {
    for (unsigned long n = 1; n <= cfg.n_max; ++n) {
      const CertifiedReal closed = closed_form_I(n, m).evaluate(bits);
      const CertifiedReal series = oracle_I_series(n, m, bits);
      std::string quad_text = "no convergence", levels = "-", agree = "false";
      try {
        const QuadratureResult q = oracle_I_quadrature(n, m, bits, cfg.policy().quadrature);
        quad_text = q.estimate.str(digits_for(bits));
        levels = std::to_string(q.levels_used);
        if (closed.overlaps(q.estimate) && closed.overlaps(series) && q.estimate.overlaps(series)) agree = "true";
      } catch (const OracleError&) {
      }
      ok = ok && agree == "true";
      values.rows.push_back({std::to_string(n), std::to_string(m), closed.str(digits_for(bits)), quad_text, levels,
                             series.str(digits_for(bits)), agree});
    }
  }
  write_output(os, "oracle", cfg, ms, &values, make_trace({}));
  return ok ? kExitOk : kExitClaimFailed;
}

}  // namespace zetalab::cli

#endif  // ZETALAB_CLI_COMMANDS_HPP
