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

#include "support/test_oracles.hpp"
#include "zetalab/zeta/alternating.hpp"
#include "zetalab/zeta/bernoulli.hpp"
#include "zetalab/zeta/closed_form.hpp"
#include "zetalab/zeta/zeta_value.hpp"

namespace {

using testing_oracles::within;
using zetalab::CertifiedReal;
using zetalab::Integer;
using zetalab::Rational;

Rational q(const char* s) { return Rational::parse(s); }

CertifiedReal ball(const zetalab::RationalEnclosure& e, int bits) {
  return CertifiedReal::from_rational(e.center, e.radius, bits);
}

TEST(Bernoulli, MatchesRecurrence) {
  const auto ref = testing_oracles::bernoulli_recurrence(60);
  for (unsigned k = 1; k <= 30; ++k) EXPECT_EQ(zetalab::bernoulli_even(k).raw(), ref[2 * k]) << k;
  EXPECT_EQ(zetalab::bernoulli_even(1), q("1/6"));
  EXPECT_EQ(zetalab::bernoulli_even(2), q("-1/30"));
  EXPECT_THROW(zetalab::bernoulli_even(0), std::domain_error);
}

TEST(Alternating, ChebyshevWeightsSumToT3) {
  for (unsigned n = 1; n <= 60; ++n) {
    Integer s = 0;
    for (const auto& c : zetalab::shifted_chebyshev_coefficients(n)) s += c;
    EXPECT_EQ(s, testing_oracles::chebyshev_T_at_3(n)) << n;
  }
}

TEST(Alternating, PartialSumMatchesFold) {
  for (unsigned long M = 0; M <= 40; ++M)
    for (int m = 2; m <= 4; ++m)
      EXPECT_EQ(zetalab::eta_partial(M, m).raw(), testing_oracles::alternating_fold(M, 2 * m + 1));
  EXPECT_EQ(zetalab::eta_partial(1, 2), Rational(1));
  EXPECT_EQ(zetalab::eta_partial(2, 2), q("31/32"));
  EXPECT_EQ(zetalab::eta_partial(3, 2), q("7565/7776"));
  EXPECT_THROW(zetalab::eta_partial(3, 1), std::domain_error);
}

// Consecutive partial sums bracket the limit, so the accelerated enclosure
// must meet [S_{2K}, S_{2K+1}] for every K.
TEST(Alternating, AcceleratedEnclosureMeetsPartialBracket) {
  for (unsigned first : {1u, 2u, 7u}) {
    for (unsigned power : {3u, 5u, 9u}) {
      const auto e = zetalab::accelerated_alternating_power_sum(first, power, 40);
      for (unsigned K : {1u, 5u, 50u}) {
        const Rational lo = zetalab::alternating_power_partial_sum(first, power, 2 * K);
        const Rational hi = zetalab::alternating_power_partial_sum(first, power, 2 * K + 1);
        EXPECT_LE(e.center - e.radius, hi);
        EXPECT_GE(e.center + e.radius, lo);
      }
    }
  }
}

TEST(Zeta, MatchesReferenceDigits) {
  const char* refs[] = {testing_oracles::kZeta5, testing_oracles::kZeta7, testing_oracles::kZeta9,
                        testing_oracles::kZeta11, testing_oracles::kZeta13};
  for (int m = 2; m <= 6; ++m) {
    const auto z = zetalab::zeta_value(m, 192);
    EXPECT_TRUE(within(z, refs[m - 2], 1e-55)) << m << " " << z.str();
    EXPECT_LT(testing_oracles::relative_radius(z), 1e-55);
  }
  EXPECT_TRUE(within(zetalab::eta_value(2, 192), testing_oracles::kEta5, 1e-55));
  EXPECT_TRUE(within(ball(zetalab::zeta_euler_maclaurin(3, 220), 192), testing_oracles::kZeta3, 1e-55));
}

TEST(Zeta, EtaRouteAgrees) {
  for (int m = 2; m <= 8; ++m) {
    const auto z = zetalab::zeta_value(m, 256);
    const auto via_eta = zetalab::eta_value(m, 256) * zetalab::eta_zeta_factor(m).inverse();
    EXPECT_TRUE(z.overlaps(via_eta)) << m;
  }
}

TEST(Zeta, RangeInvariant) {
  for (int m = 2; m <= 10; ++m) {
    const auto z = zetalab::zeta_value(m, 128);
    EXPECT_EQ(z.greater_than(Rational(1)), true);
    const Rational upper = Rational(1) + Rational(Integer(1), Integer(2 * m));
    EXPECT_EQ(z.less_equal(upper), true) << m;
    EXPECT_EQ(z.floor(), Integer(1));
  }
}

// A finer computation stays inside the coarser ball.
TEST(Zeta, PrecisionMonotone) {
  for (int m = 2; m <= 5; ++m) {
    const auto coarse = zetalab::zeta_value(m, 96);
    const auto fine = zetalab::zeta_value(m, 384);
    EXPECT_TRUE(coarse.contains(fine)) << m;
  }
}

TEST(Zeta, RejectsBadArguments) {
  EXPECT_THROW(zetalab::zeta_value(1, 128), std::domain_error);
  EXPECT_THROW(zetalab::zeta_value(2, 8), std::domain_error);
  EXPECT_THROW(zetalab::zeta_euler_maclaurin(1, 64), std::domain_error);
}

TEST(ClosedForm, EtaZetaFactor) {
  EXPECT_EQ(zetalab::eta_zeta_factor(2), q("15/16"));
  EXPECT_EQ(zetalab::eta_zeta_factor(3), q("63/64"));
  EXPECT_EQ(zetalab::eta_zeta_factor(4), q("255/256"));
}

TEST(ClosedForm, SmallCases) {
  const auto i12 = zetalab::closed_form_I(1, 2);
  EXPECT_EQ(i12.alpha, q("-15/8"));
  EXPECT_EQ(i12.beta, q("63/32"));
  const auto i22 = zetalab::closed_form_I(2, 2);
  EXPECT_EQ(i22.alpha, q("15/4"));
  EXPECT_EQ(i22.beta, -(q("31/32") + 2 * q("7565/7776") + zetalab::eta_partial(4, 2)));
  EXPECT_EQ(zetalab::closed_form_I(1, 3).alpha, q("-63/32"));
  EXPECT_THROW(zetalab::closed_form_I(0, 2), std::domain_error);
  EXPECT_THROW(zetalab::closed_form_I(1, 1), std::domain_error);
}

TEST(ClosedForm, MatchesReferenceIntegrals) {
  struct Case { unsigned long n; int m; const char* ref; };
  const Case cases[] = {{1, 2, testing_oracles::kI_1_2}, {2, 2, testing_oracles::kI_2_2},
                        {4, 2, testing_oracles::kI_4_2}, {12, 2, testing_oracles::kI_12_2},
                        {1, 3, testing_oracles::kI_1_3}, {8, 4, testing_oracles::kI_8_4}};
  for (const auto& c : cases) {
    const auto v = zetalab::closed_form_I(c.n, c.m).evaluate(192);
    EXPECT_TRUE(within(v, c.ref, 1e-50)) << c.n << "," << c.m << " " << v.str();
  }
}

// Coefficients follow alpha = (-1)^n (2^{2m}-1) 2^{n-2m} and the constant
// term is an independent fold of the binomial-weighted partial sums.
TEST(ClosedForm, CoefficientLaw) {
  for (int m = 2; m <= 5; ++m) {
    for (unsigned long n = 1; n <= 30; ++n) {
      const auto f = zetalab::closed_form_I(n, m);
      Rational mag = Rational(zetalab::pow2(2UL * m) - 1);
      for (unsigned long i = 0; i < n; ++i) mag *= 2;
      for (int i = 0; i < 2 * m; ++i) mag /= 2;
      EXPECT_EQ(f.alpha, n % 2 == 0 ? mag : -mag);
      mpq_class beta = 0;
      for (unsigned long s = 0; s <= n; ++s)
        beta += mpq_class(zetalab::binomial(n, s)) * testing_oracles::alternating_fold(n + s, 2 * m + 1);
      EXPECT_EQ(f.beta.raw(), n % 2 == 0 ? mpq_class(-beta) : beta);
    }
  }
}

// 0 < I_{n,m} and I_{2n,m} = c (zeta - P*).
TEST(ClosedForm, PositivityAndPStar) {
  for (int m = 2; m <= 4; ++m) {
    for (unsigned long n = 1; n <= 12; ++n) {
      EXPECT_EQ(zetalab::closed_form_I(n, m).evaluate(192).greater_than(Rational(0)), true);
      const auto even = zetalab::closed_form_I(2 * n, m);
      const Rational c = zetalab::zeta_coefficient_magnitude(2 * n, m);
      EXPECT_EQ(even.alpha, c);
      EXPECT_EQ(even.beta, -c * zetalab::p_star(n, m));
    }
  }
}

TEST(ClosedForm, PStarExample) {
  const Rational expect = q("4/15") * (q("31/32") + 2 * q("7565/7776") + zetalab::eta_partial(4, 2));
  EXPECT_EQ(zetalab::p_star(1, 2), expect);
  for (unsigned long n = 1; n <= 40; ++n) EXPECT_EQ(zetalab::p_star(n, 2).floor(), 1) << n;
  EXPECT_THROW(zetalab::p_star(0, 2), std::domain_error);
}

TEST(ZetaAffine, Algebra) {
  using zetalab::ZetaAffine;
  const auto z = ZetaAffine::zeta(2);
  const auto c = ZetaAffine::constant(2, q("1/3"));
  const auto f = (z * q("2") + c) - q("1/3");
  EXPECT_EQ(f, (ZetaAffine{2, Rational(2), Rational(0)}));
  EXPECT_EQ((f / q("2")).alpha, Rational(1));
  EXPECT_EQ(f.substitute(q("83/80")), q("83/40"));
  EXPECT_THROW(z + ZetaAffine::zeta(3), std::domain_error);
  // Exact values stay exact when zeta cancels.
  const auto g = z - z + q("5/8");
  EXPECT_EQ(g.alpha, Rational(0));
  EXPECT_EQ(g.evaluate(128).abs_error().sign(), 0);
}

}  // namespace
