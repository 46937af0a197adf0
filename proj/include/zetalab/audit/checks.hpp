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

#ifndef ZETALAB_AUDIT_CHECKS_HPP
#define ZETALAB_AUDIT_CHECKS_HPP

#include <functional>
#include <iterator>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "zetalab/audit/claim.hpp"
#include "zetalab/audit/diophantine.hpp"
#include "zetalab/exact/lcm_table.hpp"
#include "zetalab/quad/oracles.hpp"
#include "zetalab/zeta/closed_form.hpp"
#include "zetalab/zeta/zeta_value.hpp"

namespace zetalab {

enum class Rel { kLt, kLe, kGt, kGe };

inline const char* to_string(Rel r) {
  switch (r) {
    case Rel::kLt: return "<";
    case Rel::kLe: return "<=";
    case Rel::kGt: return ">";
    case Rel::kGe: return ">=";
  }
  return "?";
}

/// Decides `x rel q` for a certified x.
inline std::optional<bool> compare_certified(const CertifiedReal& x, Rel rel, const Rational& q) {
  switch (rel) {
    case Rel::kLt: return x.less_than(q);
    case Rel::kLe: return x.less_equal(q);
    case Rel::kGt: return x.greater_than(q);
    case Rel::kGe: {
      auto lt = x.less_than(q);
      if (!lt) return std::nullopt;
      return !*lt;
    }
  }
  return std::nullopt;
}

inline bool compare_exact(const Rational& x, Rel rel, const Rational& q) {
  switch (rel) {
    case Rel::kLt: return x < q;
    case Rel::kLe: return x <= q;
    case Rel::kGt: return x > q;
    case Rel::kGe: return x >= q;
  }
  return false;
}

/// Decides `f rel 0` for f = alpha zeta + beta. When zeta cancels
/// (alpha == 0) the decision is exact and needs no precision at all.
inline std::optional<bool> affine_sign(const ZetaAffine& f, Rel rel, int bits) {
  if (f.alpha.sign() == 0) return compare_exact(f.beta, rel, Rational(0));
  return compare_certified(f.evaluate(bits), rel, Rational(0));
}

inline std::string affine_str(const ZetaAffine& f, int bits) {
  if (f.alpha.sign() == 0) return f.beta.str();
  return f.evaluate(bits).str(30);
}

/// True when the ball radius is at most 2^(-bits/2) |value|, the
/// acceptance threshold for oracle agreement checks.
inline bool is_tight(const CertifiedReal& x, int bits) {
  if (x.value().is_zero()) return false;
  const Real rel = x.relative_error();
  const Real limit = Real::exp2(-bits / 2);
  return mpfr_lessequal_p(rel.get(), limit.get()) != 0;
}

/// Certified natural log of a positive integer.
inline CertifiedReal log_integer(const Integer& z, int bits) {
  const mpfr_prec_t wp = working_precision(bits);
  Real lo = Real::from_integer(z, wp, MPFR_RNDD), hi = Real::from_integer(z, wp, MPFR_RNDU);
  mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  Real mid(wp), rad(CertifiedReal::kRadiusPrecision);
  mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  Real a(CertifiedReal::kRadiusPrecision), b(CertifiedReal::kRadiusPrecision);
  mpfr_sub(a.get(), hi.get(), mid.get(), MPFR_RNDU);
  mpfr_sub(b.get(), mid.get(), lo.get(), MPFR_RNDU);
  mpfr_max(rad.get(), a.get(), b.get(), MPFR_RNDU);
  return {std::move(mid), std::move(rad), bits};
}

/// Certified log 2.
inline CertifiedReal log_two(int bits) { return log_integer(Integer(2), bits); }

/// Shared, memoized state for a batch of checks: the d_n table, exact P*
/// values and quadrature results. Safe to share between threads.
class CheckContext {
 public:
  explicit CheckContext(PrecisionPolicy policy = {}, unsigned long table_size = 1)
      : policy_(policy), table_(std::max<unsigned long>(table_size, 2)) {}

  const PrecisionPolicy& policy() const { return policy_; }

  const LcmTable& table(unsigned long need) {
    std::lock_guard lock(mu_);
    if (table_.max_n() < need) table_ = LcmTable(std::max<unsigned long>(need, 2 * table_.max_n()));
    return table_;
  }
  Integer d(unsigned long n) { return table(n)[n]; }

  const Rational& p_star_cached(unsigned long n, int m) {
    {
      std::lock_guard lock(mu_);
      if (auto it = p_star_.find({n, m}); it != p_star_.end()) return it->second;
    }
    Rational v = p_star(n, m);
    std::lock_guard lock(mu_);
    return p_star_.try_emplace({n, m}, std::move(v)).first->second;
  }

  /// Memoized summarize_cases over [k_lo, k_hi].
  const CaseSummary& cases(unsigned long n, const Integer& a, const Integer& b, const Integer& k_lo,
                           const Integer& k_hi) {
    const auto key = std::make_tuple(n, a.get_str(), b.get_str(), k_lo.get_str(), k_hi.get_str());
    {
      std::lock_guard lock(mu_);
      if (auto it = cases_.find(key); it != cases_.end()) return it->second;
    }
    CaseSummary s = summarize_cases(n, a, b, table(n), k_lo, k_hi, policy_.brute_force_cap);
    std::lock_guard lock(mu_);
    return cases_.try_emplace(key, std::move(s)).first->second;
  }

  /// Quadrature value of I_{n,m}, or empty if it did not converge.
  std::optional<CertifiedReal> quadrature(unsigned long n, int m, int bits) {
    const auto key = std::make_tuple(n, m, bits);
    {
      std::lock_guard lock(mu_);
      if (auto it = quad_.find(key); it != quad_.end()) return it->second;
    }
    std::optional<CertifiedReal> v;
    try {
      v = oracle_I_quadrature(n, m, bits, policy_.quadrature).estimate;
    } catch (const OracleError&) {
    }
    std::lock_guard lock(mu_);
    return quad_.try_emplace(key, v).first->second;
  }

 private:
  PrecisionPolicy policy_;
  std::mutex mu_;
  LcmTable table_;
  std::map<std::pair<unsigned long, int>, Rational> p_star_;
  std::map<std::tuple<unsigned long, int, int>, std::optional<CertifiedReal>> quad_;
  std::map<std::tuple<unsigned long, std::string, std::string, std::string, std::string>, CaseSummary> cases_;
};

inline ClaimParams params_n(unsigned long n) { return {n, std::nullopt, std::nullopt}; }
inline ClaimParams params_nm(unsigned long n, int m) { return {n, m, std::nullopt}; }
inline ClaimParams params_m(int m) { return {std::nullopt, m, std::nullopt}; }

// ---------------------------------------------------------------------------
// d_n growth

/// log d_n < 1.03883 n, log d_n < (3 log 2 / 2) n, and d_n^2 < 8^n for
/// every n <= N; plus the constant comparison 1.03883 < 3 log 2 / 2.
/// Rows come grouped by claim, n ascending.
inline std::vector<ClaimReport> check_dn_growth(unsigned long N, CheckContext& ctx) {
  if (N < 1) throw std::domain_error("check_dn_growth: N must be >= 1");
  const LcmTable& table = ctx.table(N);
  const int bits = ctx.policy().precision_bits;
  const Rational c6(103883, 100000);
  std::vector<ClaimReport> eq6, eq7, eq8;
  eq6.reserve(N + 1);
  eq7.reserve(N);
  eq8.reserve(N);

  eq6.push_back(decide_certified("eq6", {}, ctx.policy(), [&](int b) {
    const CertifiedReal k = log_two(b) * Rational(3, 2);
    auto gt = k.greater_than(c6);
    return Decision{gt, "1.03883", k.str(30), "constant comparison 1.03883 < 3 log 2 / 2"};
  }));
  const CertifiedReal ln2_half3 = log_two(bits) * Rational(3, 2);
  for (unsigned long n = 1; n <= N; ++n) {
    const Integer& d = table[n];
    eq6.push_back(decide_certified("eq6", params_n(n), ctx.policy(), [&](int b) {
      const CertifiedReal l = log_integer(d, b);
      const Rational rhs = c6 * Rational(n);
      return Decision{l.less_than(rhs), l.str(30), rhs.str(), "externally sourced bound, checked on the window"};
    }));
    eq7.push_back(decide_certified("eq7", params_n(n), ctx.policy(), [&](int b) {
      const CertifiedReal l = log_integer(d, b);
      const CertifiedReal r = (b == bits ? ln2_half3 : log_two(b) * Rational(3, 2)) * Rational(n);
      return Decision{(l - r).less_than(Rational(0)), l.str(30), r.str(30), "log d_n < 3 n log 2 / 2"};
    }));
    const Integer sq = d * d;
    const Integer rhs = pow2(3 * n);
    eq8.push_back(exact_report("eq8", params_n(n), sq < rhs, "d_n^2=" + sq.get_str(),
                               "8^n=" + (n <= 64 ? rhs.get_str() : std::string("2^") + std::to_string(3 * n)),
                               "squared form of d_n < (2 sqrt 2)^n"));
  }
  std::vector<ClaimReport> out;
  out.reserve(eq6.size() + eq7.size() + eq8.size());
  for (auto* v : {&eq6, &eq7, &eq8}) std::move(v->begin(), v->end(), std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// zeta range

/// 1 < zeta(2m+1) <= 1 + 1/(2m); key "eq10" for m = 2 with the bound 5/4,
/// "zeta_range" for the general statement.
inline ClaimReport check_zeta_range(int m, const std::string& key, const PrecisionPolicy& policy) {
  const Rational upper = Rational(1) + Rational(Integer(1), Integer(2 * m));
  return decide_certified(key, params_m(m), policy, [&](int b) {
    const CertifiedReal z = zeta_value(m, b);
    return Decision{all_of({z.greater_than(Rational(1)), z.less_equal(upper)}), z.str(30),
                    "(1, " + upper.str() + "]", {}};
  });
}

// ---------------------------------------------------------------------------
// integral bounds

namespace detail {

inline ClaimReport affine_bound_report(const std::string& key, ClaimParams params,
                                       const PrecisionPolicy& policy, const ZetaAffine& value,
                                       std::initializer_list<std::pair<ZetaAffine, Rel>> conditions,
                                       const std::function<std::string(int)>& rhs_text,
                                       std::string note = {}) {
  std::vector<std::pair<ZetaAffine, Rel>> conds(conditions);
  return decide_certified(key, std::move(params), policy, [&](int b) {
    std::optional<bool> acc = true;
    for (const auto& [f, rel] : conds) {
      acc = all_of({acc, affine_sign(f, rel, b)});
      if (acc && !*acc) break;
    }
    return Decision{acc, affine_str(value, b), rhs_text(b), note};
  });
}

}  // namespace detail

/// Bounds on I_{n,m} and d_n I_{n,m} for n = 1..N, evaluated from the
/// closed form with the certified zeta(2m+1). Keys for m = 2: eq5, eq11,
/// eq12; for every m: eq61, eq62, eq64, eq64_unit.
inline std::vector<ClaimReport> check_integral_bounds(unsigned long N, int m, CheckContext& ctx) {
  if (N < 1) throw std::domain_error("check_integral_bounds: N must be >= 1");
  if (m < 2) throw std::domain_error("check_integral_bounds: m must be >= 2");
  const auto& policy = ctx.policy();
  std::map<std::string, std::vector<ClaimReport>> rows;
  const Rational factor = eta_zeta_factor(m);
  const Rational m_bound = Rational(1) + Rational(Integer(1), Integer(2 * m));
  for (unsigned long n = 1; n <= N; ++n) {
    const ZetaAffine I = closed_form_I(n, m);
    const Rational d(ctx.d(n));
    const ZetaAffine dI = I * d;
    const Rational quarter_n = pow2_rational(-2L * static_cast<long>(n));
    const Rational half_n = pow2_rational(-static_cast<long>(n));  // (2^{-n/2})^2
    const ZetaAffine upper61 = ZetaAffine::zeta(m) * (factor * quarter_n);
    auto upper_text = [&](int b) { return upper61.evaluate(b).str(30); };

    if (m == 2) {
      rows["eq5"].push_back(detail::affine_bound_report(
          "eq5", params_nm(n, m), policy, I, {{I, Rel::kGt}, {I - upper61, Rel::kLe}}, upper_text));
      // 0 < d_n I_n < (75/64) 2^{-n/2}, compared in squares.
      const Rational r11 = Rational(75 * 75, 64 * 64) * half_n;
      rows["eq11"].push_back(decide_certified("eq11", params_nm(n, m), policy, [&](int b) {
        const CertifiedReal x = dI.evaluate(b);
        return Decision{all_of({affine_sign(dI, Rel::kGt, b), (x * x).less_than(r11)}), x.str(30),
                        "(75/64)^2 2^-n = " + r11.str(), "compared as squares"};
      }));
      rows["eq12"].push_back(detail::affine_bound_report(
          "eq12", params_nm(n, m), policy, dI, {{dI, Rel::kGt}, {dI - Rational(1), Rel::kLt}},
          [](int) { return std::string("(0, 1)"); }));
    }
    rows["eq61"].push_back(detail::affine_bound_report(
        "eq61", params_nm(n, m), policy, I, {{I, Rel::kGt}, {I - upper61, Rel::kLe}}, upper_text));
    rows["eq62"].push_back(decide_certified("eq62", params_nm(n, m), policy, [&](int b) {
      const CertifiedReal x = dI.evaluate(b);
      const CertifiedReal z = zeta_value(m, b);
      const CertifiedReal rhs = z * z * half_n;
      return Decision{all_of({affine_sign(dI, Rel::kGt, b), (x * x - rhs).less_than(Rational(0))}),
                      x.str(30), "zeta^2 2^-n = " + rhs.str(30), "compared as squares"};
    }));
    const Rational r64 = m_bound * m_bound * half_n;
    rows["eq64"].push_back(decide_certified("eq64", params_nm(n, m), policy, [&](int b) {
      const CertifiedReal x = dI.evaluate(b);
      return Decision{all_of({affine_sign(dI, Rel::kGt, b), (x * x).less_than(r64)}), x.str(30),
                      "(1+1/(2m))^2 2^-n = " + r64.str(), "compared as squares"};
    }));
    rows["eq64_unit"].push_back(detail::affine_bound_report(
        "eq64_unit", params_nm(n, m), policy, dI, {{dI, Rel::kGt}, {dI - Rational(1), Rel::kLt}},
        [](int) { return std::string("(0, 1)"); },
        m == 2 ? "stated for m >= 3; evaluated at m = 2 as well" : ""));
  }
  std::vector<ClaimReport> out;
  for (const char* key : {"eq5", "eq11", "eq12", "eq61", "eq62", "eq64", "eq64_unit"}) {
    auto it = rows.find(key);
    if (it == rows.end()) continue;
    std::move(it->second.begin(), it->second.end(), std::back_inserter(out));
  }
  return out;
}

// ---------------------------------------------------------------------------
// identities checked against the oracles

namespace detail {

/// Agreement of two certified values: decided once both are tight; holds
/// iff the balls overlap.
inline Decision agreement(const std::optional<CertifiedReal>& x, const std::optional<CertifiedReal>& y,
                          int bits, std::string note = {}) {
  if (!x || !y) return {std::nullopt, x ? x->str(30) : "n/a", y ? y->str(30) : "n/a",
                        "oracle did not converge"};
  Decision d{std::nullopt, x->str(30), y->str(30), std::move(note)};
  if (is_tight(*x, bits) && is_tight(*y, bits)) d.holds = x->overlaps(*y);
  return d;
}

}  // namespace detail

/// Log-moment identity: the double integral of (-log xy)^s/(1+xy) equals
/// Gamma(s+2) eta(s+2). Key "eq3".
inline ClaimReport check_log_moment(unsigned s, const PrecisionPolicy& policy) {
  ClaimParams params;
  params.n = s;
  return decide_certified("eq3", params, policy, [&](int b) {
    std::optional<CertifiedReal> lhs;
    try {
      lhs = log_moment_integral(s, b, policy.quadrature);
    } catch (const OracleError&) {
    }
    const auto eta = eta_accelerated(s + 2, working_precision(b) + 8);
    const Rational g(factorial(s + 1));
    const auto rhs = CertifiedReal::from_rational(eta.center * g, eta.radius * g, b);
    return detail::agreement(lhs, rhs, b, "s=" + std::to_string(s) + ", Gamma(s+2) eta(s+2)");
  });
}

/// The s = 2m-1 instance against (2^{2m}-1)/2^{2m} (2m)! zeta(2m+1).
/// Key "eq4" (m = 2, 45 zeta(5)/2) or "eq60".
inline ClaimReport check_log_moment_zeta(int m, const std::string& key, const PrecisionPolicy& policy) {
  return decide_certified(key, params_m(m), policy, [&](int b) {
    std::optional<CertifiedReal> lhs;
    try {
      lhs = log_moment_integral(static_cast<unsigned>(2 * m - 1), b, policy.quadrature);
    } catch (const OracleError&) {
    }
    const Rational k = eta_zeta_factor(m) * Rational(factorial(2UL * m));
    const auto rhs = zeta_value(m, b) * k;
    return detail::agreement(lhs, rhs, b, "coefficient " + k.str());
  });
}

/// Closed form against the quadrature oracle and the series oracle. Key
/// "eq28" (m = 2) or "eq81".
inline ClaimReport check_lemma(unsigned long n, int m, const std::string& key, CheckContext& ctx) {
  const ZetaAffine f = closed_form_I(n, m);
  return decide_certified(key, params_nm(n, m), ctx.policy(), [&](int b) {
    const CertifiedReal closed = f.evaluate(b);
    const auto quad = ctx.quadrature(n, m, b);
    const CertifiedReal series = oracle_I_series(n, m, b);
    Decision d = detail::agreement(closed, quad, b);
    Decision s = detail::agreement(closed, series, b);
    d.holds = all_of({d.holds, s.holds});
    d.note = "alpha=" + f.alpha.str() + ", beta=" + f.beta.str() + "; series=" + series.str(30);
    if (quad) {
      const auto gap = closed - *quad;
      d.note += "; closed-quadrature=" + gap.str(3);
    }
    d.note += "; closed-series=" + (closed - series).str(3);
    return d;
  });
}

/// The double-series representation against quadrature. Key "eq22" or "eq73".
inline ClaimReport check_series(unsigned long n, int m, const std::string& key, CheckContext& ctx) {
  return decide_certified(key, params_nm(n, m), ctx.policy(), [&](int b) {
    return detail::agreement(oracle_I_series(n, m, b), ctx.quadrature(n, m, b), b,
                             "series vs quadrature");
  });
}

/// Absolute-convergence majorant for the inner series at offset n+s+1:
/// Gamma(2m+1) sum_k (n+k+s+1)^-(2m+1) <= Gamma(2m+1)(zeta(2m+1) - 1)
/// < Gamma(2m+1) zeta(2m+1). The tail equals zeta - H_{n+s}, so both steps
/// reduce to exact statements about the partial sum H. The worst case is
/// s = 0. Key "eq19" (m = 2, with 24) or "eq71".
inline ClaimReport check_majorant(unsigned long n, int m, const std::string& key, const PrecisionPolicy& policy) {
  const unsigned power = static_cast<unsigned>(2 * m + 1);
  Rational h;
  for (unsigned long k = 1; k <= n; ++k) h += Rational(Integer(1), ipow(k, power));
  const Rational g(factorial(2UL * m));
  // lhs = g (zeta - h); middle = g (zeta - 1); rhs = g zeta.
  const ZetaAffine lhs = (ZetaAffine::zeta(m) - h) * g;
  const ZetaAffine mid = (ZetaAffine::zeta(m) - Rational(1)) * g;
  const ZetaAffine rhs = ZetaAffine::zeta(m) * g;
  return detail::affine_bound_report(
      key, params_nm(n, m), policy, lhs, {{mid - lhs, Rel::kGe}, {rhs - mid, Rel::kGt}},
      [&](int b) { return rhs.evaluate(b).str(30); }, "worst case s = 0; middle term " + g.str() + "(zeta-1)");
}

// ---------------------------------------------------------------------------
// floor and fractional-part claims about the true zeta(2m+1)

namespace detail {

/// [zeta(2m+1)] = 1, certified; the fractional-part claims rely on it.
inline std::optional<bool> zeta_floor_is_one(int m, int bits) {
  const auto fl = zeta_value(m, bits).floor();
  if (!fl) return std::nullopt;
  return *fl == 1;
}

}  // namespace detail

/// Floor and fractional-part claims for n = 1..N with the certified
/// zeta(2m+1). With y = I_{2n,m} / ((2^{2m}-1) 2^{2n-2m}) = zeta - P*:
///   m = 2:     eq35 (quadrature y), eq36, eq37, eq38, eq39, eq40
///   every m:   eq88 (quadrature y), eq89, eq90, eq91, eq91_N, eq92, eq93
inline std::vector<ClaimReport> check_floor_claims(unsigned long N, int m, CheckContext& ctx) {
  if (N < 1) throw std::domain_error("check_floor_claims: N must be >= 1");
  if (m < 2) throw std::domain_error("check_floor_claims: m must be >= 2");
  const auto& policy = ctx.policy();
  const ZetaAffine zeta = ZetaAffine::zeta(m);
  const ZetaAffine frac_zeta = zeta - Rational(1);  // valid once [zeta] = 1
  std::map<std::string, std::vector<ClaimReport>> rows;
  std::vector<bool> eq91_holds(N + 1, false);

  for (unsigned long n = 1; n <= N; ++n) {
    const Rational& P = ctx.p_star_cached(n, m);
    const Rational c = zeta_coefficient_magnitude(2 * n, m);
    const ZetaAffine y = zeta - P;
    const ClaimParams params = params_nm(n, m);
    const Integer floor_p = P.floor();

    // [P*] = [zeta - y] with y from quadrature, independent of the closed form.
    auto floor_consistency = [&](const std::string& key) {
      return decide_certified(key, params, policy, [&](int b) {
        const auto q = ctx.quadrature(2 * n, m, b);
        if (!q) return Decision{std::nullopt, floor_p.get_str(), "n/a", "quadrature did not converge"};
        const CertifiedReal v = zeta_value(m, b) - (*q) * c.inverse();
        const auto fl = v.floor();
        Decision d{std::nullopt, floor_p.get_str(), fl ? fl->get_str() : "straddles " + v.str(30),
                   "[zeta - y] with y from quadrature: " + v.str(30)};
        if (fl) d.holds = *fl == floor_p;
        return d;
      });
    };
    // [P*] = 1 + [{zeta} - y]; {zeta} - y = P* - 1 once [zeta] = 1.
    auto floor_shift = [&](const std::string& key) {
      return decide_certified(key, params, policy, [&](int b) {
        const ZetaAffine inner = frac_zeta - y;
        const Integer rhs = 1 + inner.beta.floor();
        Decision d{all_of({detail::zeta_floor_is_one(m, b), inner.alpha.sign() == 0}), floor_p.get_str(),
                   rhs.get_str(), "[zeta]=1 certified; {zeta} - y = " + inner.beta.str()};
        if (d.holds && *d.holds) d.holds = rhs == floor_p;
        return d;
      });
    };
    // 0 < {zeta} - y < {zeta} < 1
    auto frac_window = [&](const std::string& key) {
      const ZetaAffine inner = frac_zeta - y;
      return decide_certified(key, params, policy, [&](int b) {
        return Decision{all_of({detail::zeta_floor_is_one(m, b), affine_sign(inner, Rel::kGt, b),
                                affine_sign(inner - frac_zeta, Rel::kLt, b),
                                affine_sign(frac_zeta - Rational(1), Rel::kLt, b)}),
                        affine_str(inner, b), "{zeta}=" + affine_str(frac_zeta, b), {}};
      });
    };

    if (m == 2) {
      rows["eq35"].push_back(floor_consistency("eq35"));
      rows["eq36"].push_back(floor_shift("eq36"));
      rows["eq37"].push_back(detail::affine_bound_report(
          "eq37", params, policy, y, {{y, Rel::kGt}, {y - zeta * Rational(1, 64), Rel::kLe}},
          [&](int b) { return (zeta * Rational(1, 64)).evaluate(b).str(30); }));
      // {zeta} - y >= {zeta} - zeta/64 >= (63 {zeta} - 1)/64 > 0
      const ZetaAffine a = frac_zeta - y;
      const ZetaAffine b2 = frac_zeta - zeta * Rational(1, 64);
      const ZetaAffine c3 = (frac_zeta * Rational(63) - Rational(1)) * Rational(1, 64);
      rows["eq38"].push_back(decide_certified("eq38", params, policy, [&](int b) {
        return Decision{all_of({detail::zeta_floor_is_one(m, b), affine_sign(a - b2, Rel::kGe, b),
                                affine_sign(b2 - c3, Rel::kGe, b), affine_sign(c3, Rel::kGt, b)}),
                        affine_str(a, b), affine_str(c3, b), "last step is {zeta(5)} > 1/63"};
      }));
      rows["eq39"].push_back(frac_window("eq39"));
      rows["eq40"].push_back(exact_report("eq40", params, floor_p == 1, floor_p.get_str(), "1",
                                          "exact floor of P_n = " + rational_text(P, 80)));
    }
    rows["eq88"].push_back(floor_consistency("eq88"));
    rows["eq89"].push_back(floor_shift("eq89"));
    if (n < N) {
      const Rational& next = ctx.p_star_cached(n + 1, m);
      rows["eq90"].push_back(exact_report("eq90", params, next > P, "P*_{n+1}-P*_n=" + rational_text(next - P, 80),
                                          "> 0", "y decreases on the window", Provenance::kFiniteRange));
    }
    // 0 < y < {zeta}; y < {zeta} is P* > 1 exactly.
    ClaimReport r91 = decide_certified("eq91", params, policy, [&](int b) {
      return Decision{all_of({detail::zeta_floor_is_one(m, b), affine_sign(y, Rel::kGt, b),
                              affine_sign(y - frac_zeta, Rel::kLt, b)}),
                      affine_str(y, b), "{zeta}=" + affine_str(frac_zeta, b), {}};
    });
    eq91_holds[n] = r91.verdict == Verdict::kHolds;
    rows["eq91"].push_back(std::move(r91));
    rows["eq92"].push_back(frac_window("eq92"));
    rows["eq93"].push_back(exact_report("eq93", params, floor_p == 1, floor_p.get_str(), "1",
                                        "exact floor of P*"));
  }

  // Smallest n0 with eq91 holding on all of [n0, N].
  unsigned long n0 = N + 1;
  while (n0 > 1 && eq91_holds[n0 - 1]) --n0;
  ClaimReport threshold;
  if (n0 <= N) {
    threshold = exact_report("eq91_N", params_nm(n0, m), true, "N=" + std::to_string(n0),
                             "window [1, " + std::to_string(N) + "]",
                             "smallest n0 with 0 < y < {zeta} for all n0 <= n <= " + std::to_string(N),
                             Provenance::kFiniteRange);
  } else {
    threshold = exact_report("eq91_N", params_m(m), false, "none", "window [1, " + std::to_string(N) + "]",
                             "0 < y < {zeta} fails at the window end", Provenance::kFiniteRange);
  }
  rows["eq91_N"].push_back(std::move(threshold));

  std::vector<ClaimReport> out;
  for (const char* key : {"eq35", "eq36", "eq37", "eq38", "eq39", "eq40", "eq88", "eq89", "eq90", "eq91",
                          "eq91_N", "eq92", "eq93"}) {
    auto it = rows.find(key);
    if (it == rows.end()) continue;
    std::move(it->second.begin(), it->second.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace zetalab

#endif  // ZETALAB_AUDIT_CHECKS_HPP
