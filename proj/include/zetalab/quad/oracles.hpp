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

#ifndef ZETALAB_QUAD_ORACLES_HPP
#define ZETALAB_QUAD_ORACLES_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "zetalab/exact/combinatorics.hpp"
#include "zetalab/quad/tanh_sinh.hpp"
#include "zetalab/zeta/alternating.hpp"

namespace zetalab {

/// Raised when an oracle cannot certify its value (quadrature did not
/// converge by the maximum level).
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// prefactor * (-log z)^log_power * (z (1 - z))^n / (1 + z) on (0, 1).
///
/// For the double integrals over the unit square, F(xy) integrates to
/// the integral of F(z) (-log z) over (0, 1), so a kernel with
/// (-log xy)^(log_power - 1) reduces to this form.
struct ReducedIntegrand {
  unsigned long n = 0;
  unsigned log_power = 0;
  Rational prefactor = 1;

  unsigned kernel_log_power() const { return log_power - 1; }

  Real operator()(const QuadratureNode& node) const {
    const mpfr_prec_t wp = node.z.precision();
    Real v(wp), t(wp);
    mpfr_pow_ui(v.get(), node.neg_log_z.get(), log_power, MPFR_RNDN);
    if (n > 0) {
      mpfr_mul(t.get(), node.z.get(), node.one_minus_z.get(), MPFR_RNDN);
      mpfr_pow_ui(t.get(), t.get(), n, MPFR_RNDN);
      mpfr_mul(v.get(), v.get(), t.get(), MPFR_RNDN);
    }
    mpfr_add_ui(t.get(), node.z.get(), 1, MPFR_RNDN);
    mpfr_div(v.get(), v.get(), t.get(), MPFR_RNDN);
    return v;
  }
};

/// I_{n,m} = (1/(2m)!) * integral of (-log z)^{2m} (z(1-z))^n / (1+z).
inline ReducedIntegrand reduce_double_to_single(unsigned long n, int m) {
  if (n < 1) throw std::domain_error("reduce_double_to_single: n must be >= 1");
  if (m < 2) throw std::domain_error("reduce_double_to_single: m must be >= 2");
  return {n, static_cast<unsigned>(2 * m), Rational(Integer(1), factorial(2UL * m))};
}

namespace detail {

/// Bound on the integral of (-log z)^p (z(1-z))^n over the uncovered ends
/// of (0, 1). With L = min_tail_log and L' = (n+1) L: the end near 0
/// contributes at most Gamma(p+1, L') / (n+1)^(p+1), the end near 1 at most
/// e^-L'.
inline Real log_power_tail(unsigned p, unsigned long n, mpfr_prec_t wp) {
  constexpr mpfr_prec_t rp = CertifiedReal::kRadiusPrecision;
  Real ld(rp), lu(rp), e(rp), term(rp), sum(rp), out(rp);
  mpfr_set_d(ld.get(), TanhSinhRule::min_tail_log(wp), MPFR_RNDD);
  mpfr_mul_ui(ld.get(), ld.get(), n + 1, MPFR_RNDD);
  mpfr_set_d(lu.get(), TanhSinhRule::min_tail_log(wp), MPFR_RNDU);
  mpfr_mul_ui(lu.get(), lu.get(), n + 1, MPFR_RNDU);
  mpfr_neg(e.get(), ld.get(), MPFR_RNDU);
  mpfr_exp(e.get(), e.get(), MPFR_RNDU);
  // Gamma(p+1, L') = p! e^-L' sum_{i<=p} L'^i / i!, increasing in the sum
  mpfr_set_ui(term.get(), 1, MPFR_RNDU);
  mpfr_set_ui(sum.get(), 1, MPFR_RNDU);
  for (unsigned i = 1; i <= p; ++i) {
    mpfr_mul(term.get(), term.get(), lu.get(), MPFR_RNDU);
    mpfr_div_ui(term.get(), term.get(), i, MPFR_RNDU);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDU);
  }
  mpfr_mul(out.get(), sum.get(), e.get(), MPFR_RNDU);
  Real scale = Real::from_integer(factorial(p), rp, MPFR_RNDU);
  mpfr_mul(out.get(), out.get(), scale.get(), MPFR_RNDU);
  Real denom = Real::from_integer(ipow(n + 1, p + 1), rp, MPFR_RNDD);
  mpfr_div(out.get(), out.get(), denom.get(), MPFR_RNDU);
  mpfr_add(out.get(), out.get(), e.get(), MPFR_RNDU);
  return out;
}

inline QuadratureResult integrate_reduced(const ReducedIntegrand& f, int precision_bits,
                                          const QuadratureOptions& options) {
  const mpfr_prec_t wp = working_precision(precision_bits);
  const Real tail = log_power_tail(f.log_power, f.n, wp);
  auto raw = integrate_unit_interval(f, precision_bits, options, tail);
  if (f.prefactor != Rational(1)) {
    raw.estimate = raw.estimate * f.prefactor;
  }
  return raw;
}

}  // namespace detail

/// Certified I_{n,m} by tanh-sinh quadrature of the reduced integrand.
/// Throws OracleError if the level doubling has not converged by
/// options.max_level.
inline QuadratureResult oracle_I_quadrature(unsigned long n, int m, int precision_bits,
                                            const QuadratureOptions& options = {}) {
  if (precision_bits < 64) throw std::domain_error("oracle_I_quadrature: precision_bits must be >= 64");
  auto result = detail::integrate_reduced(reduce_double_to_single(n, m), precision_bits, options);
  if (!result.converged)
    throw OracleError("oracle_I_quadrature: no convergence for n=" + std::to_string(n) + ", m=" +
                      std::to_string(m) + " by level " + std::to_string(options.max_level));
  return result;
}

/// sum_{s=0}^{n} (-1)^s C(n,s) sum_{k<terms} (-1)^k / (n+k+s+1)^{2m+1},
/// the double series with every inner sum cut after `terms` terms.
inline Rational series_partial_sum(unsigned long n, int m, unsigned terms) {
  const auto row = binomial_row(n);
  const unsigned power = static_cast<unsigned>(2 * m + 1);
  Rational acc;
  for (unsigned long s = 0; s <= n; ++s) {
    const Rational inner = alternating_power_partial_sum(n + s + 1, power, terms);
    acc += (s % 2 == 0 ? Rational(row[s]) : -Rational(row[s])) * inner;
  }
  return acc;
}

/// Certified I_{n,m} from the double series
/// sum_s (-1)^s C(n,s) sum_k (-1)^k / (n+k+s+1)^{2m+1}.
///
/// The outer sum is exact; each inner alternating sum is accelerated with
/// exact integer weights and carries a rigorous truncation bound. The
/// inner sums converge absolutely (their absolute sums are below zeta(2m+1)).
inline CertifiedReal oracle_I_series(unsigned long n, int m, int precision_bits) {
  if (n < 1) throw std::domain_error("oracle_I_series: n must be >= 1");
  if (m < 2) throw std::domain_error("oracle_I_series: m must be >= 2");
  if (precision_bits < 64) throw std::domain_error("oracle_I_series: precision_bits must be >= 64");
  const auto row = binomial_row(n);
  const unsigned power = static_cast<unsigned>(2 * m + 1);
  // The binomial weights sum to 2^n; I_{n,m} itself is about 4^-n.
  const long target = static_cast<long>(working_precision(precision_bits)) + 3 * static_cast<long>(n) + 8;
  const unsigned terms = acceleration_terms(target);
  Rational center, radius;
  for (unsigned long s = 0; s <= n; ++s) {
    const auto inner = accelerated_alternating_power_sum(n + s + 1, power, terms);
    const Rational w(row[s]);
    center += (s % 2 == 0 ? w : -w) * inner.center;
    radius += w * inner.radius;
  }
  return CertifiedReal::from_rational(center, radius, precision_bits);
}

/// Certified value of the double integral of (-log xy)^s / (1 + xy) over
/// the unit square, through its reduced form, integral of
/// (-log z)^{s+1} / (1 + z) over (0, 1).
inline CertifiedReal log_moment_integral(unsigned s, int precision_bits,
                                         const QuadratureOptions& options = {}) {
  if (s < 1) throw std::domain_error("log_moment_integral: s must be >= 1");
  if (precision_bits < 64) throw std::domain_error("log_moment_integral: precision_bits must be >= 64");
  const ReducedIntegrand f{0, s + 1, Rational(1)};
  auto result = detail::integrate_reduced(f, precision_bits, options);
  if (!result.converged)
    throw OracleError("log_moment_integral: no convergence for s=" + std::to_string(s));
  return result.estimate;
}

/// Both sides of the reduction identity for F(t) = t^j: the tensor-product
/// quadrature of F(xy) over the unit square, and the one-dimensional
/// integral of F(z) (-log z). Exact value 1/(j+1)^2.
struct ReductionCheck {
  CertifiedReal double_integral;
  CertifiedReal single_integral;
};

inline ReductionCheck reduction_identity_check(unsigned j, int precision_bits,
                                               const QuadratureOptions& options = {}) {
  const mpfr_prec_t wp = working_precision(precision_bits);
  // |F| <= 1 on the square; the uncovered strips have area below 4 e^-L.
  Real square_tail(CertifiedReal::kRadiusPrecision);
  mpfr_set_d(square_tail.get(), -TanhSinhRule::min_tail_log(wp), MPFR_RNDU);
  mpfr_exp(square_tail.get(), square_tail.get(), MPFR_RNDU);
  mpfr_mul_ui(square_tail.get(), square_tail.get(), 4, MPFR_RNDU);

  auto two_d = integrate_unit_square(
      [j](const QuadratureNode& x, const QuadratureNode& y) {
        Real v(x.z.precision());
        mpfr_mul(v.get(), x.z.get(), y.z.get(), MPFR_RNDN);
        mpfr_pow_ui(v.get(), v.get(), j, MPFR_RNDN);
        return v;
      },
      precision_bits, options, square_tail);
  auto one_d = integrate_unit_interval(
      [j](const QuadratureNode& node) {
        Real v(node.z.precision());
        mpfr_pow_ui(v.get(), node.z.get(), j, MPFR_RNDN);
        mpfr_mul(v.get(), v.get(), node.neg_log_z.get(), MPFR_RNDN);
        return v;
      },
      precision_bits, options, detail::log_power_tail(1, 0, wp));
  if (!two_d.converged || !one_d.converged)
    throw OracleError("reduction_identity_check: no convergence for j=" + std::to_string(j));
  return {std::move(two_d.estimate), std::move(one_d.estimate)};
}

}  // namespace zetalab

#endif  // ZETALAB_QUAD_ORACLES_HPP
