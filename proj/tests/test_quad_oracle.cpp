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

#include <thread>
#include <vector>

#include "support/test_oracles.hpp"
#include "zetalab/quad/oracles.hpp"
#include "zetalab/zeta/closed_form.hpp"

namespace {

using testing_oracles::combined_relative;
using testing_oracles::within;
using zetalab::CertifiedReal;
using zetalab::Integer;
using zetalab::Rational;

TEST(Reduction, Parameters) {
  const auto f = zetalab::reduce_double_to_single(1, 2);
  EXPECT_EQ(f.n, 1u);
  EXPECT_EQ(f.log_power, 4u);
  EXPECT_EQ(f.kernel_log_power(), 3u);
  EXPECT_EQ(f.prefactor, Rational::parse("1/24"));
  EXPECT_EQ(zetalab::reduce_double_to_single(3, 3).prefactor, Rational::parse("1/720"));
  EXPECT_THROW(zetalab::reduce_double_to_single(0, 2), std::domain_error);
  EXPECT_THROW(zetalab::reduce_double_to_single(1, 1), std::domain_error);
}

TEST(Quadrature, MatchesReferenceDigits) {
  EXPECT_TRUE(within(zetalab::oracle_I_quadrature(1, 2, 192).estimate, testing_oracles::kI_1_2, 1e-50));
  EXPECT_TRUE(within(zetalab::oracle_I_quadrature(4, 2, 192).estimate, testing_oracles::kI_4_2, 1e-50));
  EXPECT_TRUE(within(zetalab::oracle_I_quadrature(1, 3, 192).estimate, testing_oracles::kI_1_3, 1e-50));
  EXPECT_TRUE(within(zetalab::oracle_I_quadrature(8, 4, 192).estimate, testing_oracles::kI_8_4, 1e-50));
}

TEST(Quadrature, AgreesWithClosedForm) {
  for (int m = 2; m <= 3; ++m) {
    for (unsigned long n = 1; n <= 6; ++n) {
      const auto q = zetalab::oracle_I_quadrature(n, m, 160);
      EXPECT_TRUE(q.converged);
      const auto c = zetalab::closed_form_I(n, m).evaluate(160);
      EXPECT_TRUE(q.estimate.overlaps(c)) << n << "," << m;
      EXPECT_LT(combined_relative(c, q.estimate), 1e-30);
    }
  }
}

TEST(Quadrature, ReportsNonConvergence) {
  zetalab::QuadratureOptions opts;
  opts.min_level = 2;
  opts.max_level = 2;
  EXPECT_THROW(zetalab::oracle_I_quadrature(6, 2, 256, opts), zetalab::OracleError);
  EXPECT_THROW(zetalab::oracle_I_quadrature(1, 2, 32), std::domain_error);
}

// Doubling the precision keeps the value inside the coarser ball.
TEST(Quadrature, PrecisionMonotone) {
  for (unsigned long n : {1ul, 3ul, 7ul}) {
    const auto coarse = zetalab::oracle_I_quadrature(n, 2, 96).estimate;
    const auto fine = zetalab::oracle_I_quadrature(n, 2, 192).estimate;
    EXPECT_TRUE(coarse.contains(fine)) << n;
  }
}

TEST(Quadrature, ConcurrentCallsAgree) {
  const auto ref = zetalab::oracle_I_quadrature(5, 2, 128).estimate.str(45);
  std::vector<std::string> got(4);
  std::vector<std::thread> pool;
  for (int i = 0; i < 4; ++i)
    pool.emplace_back([&got, i] { got[i] = zetalab::oracle_I_quadrature(5, 2, 128).estimate.str(45); });
  for (auto& t : pool) t.join();
  for (const auto& g : got) EXPECT_EQ(g, ref);
}

TEST(Series, AgreesWithQuadratureAndClosedForm) {
  for (int m = 2; m <= 4; ++m) {
    for (unsigned long n : {1ul, 2ul, 5ul, 9ul}) {
      const auto s = zetalab::oracle_I_series(n, m, 192);
      EXPECT_TRUE(s.overlaps(zetalab::oracle_I_quadrature(n, m, 192).estimate)) << n << "," << m;
      EXPECT_TRUE(s.overlaps(zetalab::closed_form_I(n, m).evaluate(192)));
      EXPECT_LT(testing_oracles::relative_radius(s), 1e-50);
    }
  }
  EXPECT_TRUE(within(zetalab::oracle_I_series(12, 2, 192), testing_oracles::kI_12_2, 1e-45));
}

// Cutting every inner sum after one or two terms brackets I_{1,2}.
TEST(Series, TruncationsBracket) {
  const Rational one = zetalab::series_partial_sum(1, 2, 1);
  const Rational two = zetalab::series_partial_sum(1, 2, 2);
  const auto exact = zetalab::closed_form_I(1, 2).evaluate(128);
  EXPECT_EQ(exact.less_than(one), true);
  EXPECT_EQ(exact.greater_than(two), true);
  EXPECT_EQ(one, Rational::parse("1/32") - Rational::parse("1/243"));
}

// Integral of (-log xy)^s/(1+xy) equals (s+1)! (1 - 2^-(s+1)) zeta(s+2).
TEST(LogMoment, ZetaIdentity) {
  const auto v3 = zetalab::log_moment_integral(3, 192);
  EXPECT_TRUE(within(v3 * Rational::parse("2/45"), testing_oracles::kZeta5, 1e-50));
  const auto v5 = zetalab::log_moment_integral(5, 192);
  EXPECT_TRUE(within(v5 * (Rational(Integer(64), Integer(63 * 720))), testing_oracles::kZeta7, 1e-50));
  const auto v1 = zetalab::log_moment_integral(1, 192);
  EXPECT_TRUE(within(v1 * Rational::parse("2/3"), testing_oracles::kZeta3, 1e-50));
  EXPECT_THROW(zetalab::log_moment_integral(0, 192), std::domain_error);
}

TEST(Reduction, IdentityForMonomials) {
  for (unsigned j = 0; j <= 4; ++j) {
    const auto r = zetalab::reduction_identity_check(j, 128);
    const Rational exact(Integer(1), Integer((j + 1) * (j + 1)));
    const auto e = CertifiedReal::exact(exact, 128);
    EXPECT_TRUE(r.single_integral.overlaps(e)) << j;
    EXPECT_TRUE(r.double_integral.overlaps(e)) << j;
    EXPECT_TRUE(r.double_integral.overlaps(r.single_integral));
    EXPECT_LT(combined_relative(r.double_integral, r.single_integral), 1e-30);
  }
}

}  // namespace
