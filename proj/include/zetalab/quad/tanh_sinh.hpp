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

#ifndef ZETALAB_QUAD_TANH_SINH_HPP
#define ZETALAB_QUAD_TANH_SINH_HPP

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "zetalab/numeric/certified_real.hpp"

namespace zetalab {

/// One tanh-sinh abscissa on (0, 1) with the complements needed to evaluate
/// log-singular integrands without cancellation.
struct QuadratureNode {
  Real z;
  Real one_minus_z;
  Real neg_log_z;
  Real jacobian;  // dz/dt, the step h is applied by the caller
};

struct QuadratureOptions {
  int max_level = 12;
  int min_level = 4;  // at least 2, see TanhSinhRule::min_tail_log
};

struct QuadratureResult {
  CertifiedReal estimate;
  int levels_used = 0;
  bool converged = false;
};

/// Abscissas and weights for z = (1 + tanh(pi/2 sinh t)) / 2, cached per
/// (working precision, level). Level 0 holds the integer points t = i,
/// level k > 0 the odd multiples of 2^-k. Readers share the cache; a
/// missing level is built outside the lock and inserted once.
class TanhSinhRule {
 public:
  using Level = std::vector<QuadratureNode>;

  static std::shared_ptr<const Level> level(mpfr_prec_t wp, int k) {
    static std::shared_mutex mu;
    static std::map<std::pair<mpfr_prec_t, int>, std::shared_ptr<const Level>> cache;
    const auto key = std::make_pair(wp, k);
    {
      std::shared_lock lock(mu);
      if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const Level>(build(wp, k));
    std::unique_lock lock(mu);
    return cache.try_emplace(key, std::move(built)).first->second;
  }

  /// Largest |t| kept: beyond it min(z, 1-z) < 2^(-2 wp).
  static double t_max(mpfr_prec_t wp) {
    return std::asinh(2.0 * static_cast<double>(wp) * std::log(2.0) / M_PI) + 0.25;
  }

  /// Lower bound on -log z and -log(1-z) at the outermost kept abscissa
  /// for any level >= 2 (the last node sits within 1/4 of t_max).
  static double min_tail_log(mpfr_prec_t wp) { return 2.0 * static_cast<double>(wp) * std::log(2.0); }

 private:
  static Level build(mpfr_prec_t wp, int k) {
    Level out;
    const double tmax = t_max(wp);
    const long scale = 1L << k;
    const long limit = static_cast<long>(std::floor(tmax * static_cast<double>(scale)));
    Real pi(wp), t(wp), sh(wp), ch(wp), u(wp), e(wp), tmp(wp);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    for (long i = -limit; i <= limit; ++i) {
      if (k > 0 && (i % 2 == 0)) continue;
      mpfr_set_si_2exp(t.get(), i, -k, MPFR_RNDN);
      mpfr_sinh_cosh(sh.get(), ch.get(), t.get(), MPFR_RNDN);
      // |u| = pi/2 |sinh t|, e = exp(-2|u|)
      mpfr_mul(u.get(), pi.get(), sh.get(), MPFR_RNDN);
      mpfr_abs(u.get(), u.get(), MPFR_RNDN);
      mpfr_neg(e.get(), u.get(), MPFR_RNDN);
      mpfr_exp(e.get(), e.get(), MPFR_RNDN);

      QuadratureNode node{Real(wp), Real(wp), Real(wp), Real(wp)};
      Real big(wp), small(wp), log1p_e(wp);
      mpfr_add_ui(tmp.get(), e.get(), 1, MPFR_RNDN);
      mpfr_ui_div(big.get(), 1, tmp.get(), MPFR_RNDN);   // 1/(1+e)
      mpfr_div(small.get(), e.get(), tmp.get(), MPFR_RNDN);  // e/(1+e)
      mpfr_log1p(log1p_e.get(), e.get(), MPFR_RNDN);
      if (i >= 0) {
        node.z = big;
        node.one_minus_z = small;
        node.neg_log_z = log1p_e;
      } else {
        node.z = small;
        node.one_minus_z = big;
        mpfr_add(node.neg_log_z.get(), u.get(), log1p_e.get(), MPFR_RNDN);  // 2|u| = pi |sinh t|
      }
      // dz/dt = pi cosh t * z (1 - z)
      mpfr_mul(tmp.get(), pi.get(), ch.get(), MPFR_RNDN);
      mpfr_mul(tmp.get(), tmp.get(), node.z.get(), MPFR_RNDN);
      mpfr_mul(node.jacobian.get(), tmp.get(), node.one_minus_z.get(), MPFR_RNDN);
      out.push_back(std::move(node));
    }
    return out;
  }
};

namespace detail {

// Rounding charged per accumulated node: node construction and a few dozen
// correctly rounded operations in the integrand, with ample slack.
inline constexpr long kOpsPerNode = 256;

inline Real rounding_charge(const Real& l1, std::size_t nodes, mpfr_prec_t wp) {
  Real r(CertifiedReal::kRadiusPrecision);
  mpfr_mul_ui(r.get(), l1.get(), static_cast<unsigned long>(nodes) + kOpsPerNode, MPFR_RNDU);
  mpfr_mul_2si(r.get(), r.get(), 1 - static_cast<long>(wp), MPFR_RNDU);
  return r;
}

}  // namespace detail

/// Tanh-sinh integration of f over (0, 1) with level doubling.
///
/// `f` maps a QuadratureNode to a Real at the working precision.
/// `tail_bound` must bound the integral of |f| over the parts of (0, 1)
/// not covered by the kept abscissas. The reported error is twice the last
/// level difference plus the rounding charge and the tail bound; convergence
/// means the last difference is below 2^-precision_bits relative.
template <class F>
QuadratureResult integrate_unit_interval(F&& f, int precision_bits, const QuadratureOptions& options,
                                         const Real& tail_bound) {
  const mpfr_prec_t wp = working_precision(precision_bits);
  Real sum(wp), l1(wp), prev(wp), cur(wp), diff(wp), tol(wp);
  std::size_t nodes = 0;
  bool have_prev = false;
  int level = 0;
  bool converged = false;
  for (; level <= options.max_level; ++level) {
    const auto rule = TanhSinhRule::level(wp, level);
    for (const auto& node : *rule) {
      Real v = f(node);
      mpfr_mul(v.get(), v.get(), node.jacobian.get(), MPFR_RNDN);
      mpfr_add(sum.get(), sum.get(), v.get(), MPFR_RNDN);
      mpfr_abs(v.get(), v.get(), MPFR_RNDN);
      mpfr_add(l1.get(), l1.get(), v.get(), MPFR_RNDU);
    }
    nodes += rule->size();
    mpfr_mul_2si(cur.get(), sum.get(), -level, MPFR_RNDN);
    if (have_prev) {
      mpfr_sub(diff.get(), cur.get(), prev.get(), MPFR_RNDU);
      mpfr_abs(diff.get(), diff.get(), MPFR_RNDU);
      mpfr_abs(tol.get(), cur.get(), MPFR_RNDN);
      mpfr_mul_2si(tol.get(), tol.get(), -precision_bits, MPFR_RNDN);
      if (level >= options.min_level && mpfr_lessequal_p(diff.get(), tol.get())) {
        converged = true;
        break;
      }
    }
    prev = cur;
    have_prev = true;
  }
  if (!converged) level = options.max_level;

  Real err(CertifiedReal::kRadiusPrecision);
  mpfr_mul_2ui(err.get(), diff.get(), 1, MPFR_RNDU);
  Real scaled_l1(wp);
  mpfr_mul_2si(scaled_l1.get(), l1.get(), -level, MPFR_RNDU);
  const Real rounding = detail::rounding_charge(scaled_l1, nodes, wp);
  mpfr_add(err.get(), err.get(), rounding.get(), MPFR_RNDU);
  mpfr_add(err.get(), err.get(), tail_bound.get(), MPFR_RNDU);
  return {CertifiedReal(std::move(cur), std::move(err), precision_bits), level, converged};
}

/// Tensor-product tanh-sinh over the unit square at fixed level, repeated
/// with level doubling until successive levels agree.
template <class F>
QuadratureResult integrate_unit_square(F&& f, int precision_bits, const QuadratureOptions& options,
                                       const Real& tail_bound) {
  const mpfr_prec_t wp = working_precision(precision_bits);
  std::vector<const QuadratureNode*> nodes;
  std::vector<std::shared_ptr<const TanhSinhRule::Level>> keep;
  Real prev(wp), cur(wp), diff(wp), tol(wp), l1(wp);
  bool have_prev = false;
  bool converged = false;
  int level = 0;
  std::size_t evaluations = 0;
  for (; level <= options.max_level; ++level) {
    keep.push_back(TanhSinhRule::level(wp, level));
    for (const auto& node : *keep.back()) nodes.push_back(&node);
    Real sum(wp);
    mpfr_set_zero(l1.get(), 1);
    for (const auto* x : nodes) {
      for (const auto* y : nodes) {
        Real v = f(*x, *y);
        mpfr_mul(v.get(), v.get(), x->jacobian.get(), MPFR_RNDN);
        mpfr_mul(v.get(), v.get(), y->jacobian.get(), MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), v.get(), MPFR_RNDN);
        mpfr_abs(v.get(), v.get(), MPFR_RNDN);
        mpfr_add(l1.get(), l1.get(), v.get(), MPFR_RNDU);
      }
    }
    evaluations = nodes.size() * nodes.size();
    mpfr_mul_2si(cur.get(), sum.get(), -2 * level, MPFR_RNDN);
    if (have_prev) {
      mpfr_sub(diff.get(), cur.get(), prev.get(), MPFR_RNDU);
      mpfr_abs(diff.get(), diff.get(), MPFR_RNDU);
      mpfr_abs(tol.get(), cur.get(), MPFR_RNDN);
      mpfr_mul_2si(tol.get(), tol.get(), -precision_bits, MPFR_RNDN);
      if (level >= options.min_level && mpfr_lessequal_p(diff.get(), tol.get())) {
        converged = true;
        break;
      }
    }
    prev = cur;
    have_prev = true;
  }
  if (!converged) level = options.max_level;
  Real err(CertifiedReal::kRadiusPrecision);
  mpfr_mul_2ui(err.get(), diff.get(), 1, MPFR_RNDU);
  mpfr_mul_2si(l1.get(), l1.get(), -2 * level, MPFR_RNDU);
  const Real rounding = detail::rounding_charge(l1, evaluations, wp);
  mpfr_add(err.get(), err.get(), rounding.get(), MPFR_RNDU);
  mpfr_add(err.get(), err.get(), tail_bound.get(), MPFR_RNDU);
  return {CertifiedReal(std::move(cur), std::move(err), precision_bits), level, converged};
}

}  // namespace zetalab

#endif  // ZETALAB_QUAD_TANH_SINH_HPP
