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

// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// argv[1] is the path of the built CLI (criterion 11).

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "support/test_oracles.hpp"
#include "zetalab/audit/checks.hpp"
#include "zetalab/audit/diophantine.hpp"
#include "zetalab/audit/registry.hpp"
#include "zetalab/quad/oracles.hpp"
#include "zetalab/zeta/closed_form.hpp"
#include "zetalab/zeta/zeta_value.hpp"

namespace {

using namespace zetalab;
using testing_oracles::combined_relative;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

// |closed - quad| within the summed radii, and the summed radii at most
// 1e-30 relative.
Outcome identity_sweep(int m, unsigned long n_max, double time_limit) {
  const auto t0 = Clock::now();
  double worst = 0;
  for (unsigned long n = 1; n <= n_max; ++n) {
    const CertifiedReal c = closed_form_I(n, m).evaluate(192);
    std::optional<CertifiedReal> q;
    try {
      q = oracle_I_quadrature(n, m, 192).estimate;
    } catch (const OracleError& e) {
      return {false, e.what()};
    }
    if (!c.overlaps(*q)) return {false, "disagreement at n=" + std::to_string(n)};
    const double rel = combined_relative(c, *q);
    worst = std::max(worst, rel);
    if (rel > 1e-30) return {false, "error " + fmt(rel) + " at n=" + std::to_string(n)};
  }
  const double secs = seconds_since(t0);
  return {secs <= time_limit, "worst relative error " + fmt(worst) + ", " + fmt(secs) + " s"};
}

Outcome criterion1() { return identity_sweep(2, 12, 60); }

Outcome criterion2() {
  const auto t0 = Clock::now();
  for (int m : {3, 4}) {
    auto r = identity_sweep(m, 8, 60);
    if (!r.pass) return {false, "m=" + std::to_string(m) + ": " + r.detail};
  }
  const double secs = seconds_since(t0);
  return {secs <= 60, fmt(secs) + " s"};
}

Outcome criterion3() {
  const CertifiedReal lhs = log_moment_integral(3, 192);
  const CertifiedReal rhs = zeta_value(2, 192) * Rational(Integer(45), Integer(2));
  const double rel = combined_relative(lhs, rhs);
  return {lhs.overlaps(rhs) && rel <= 1e-30, "relative error " + fmt(rel)};
}

Outcome criterion4() {
  const auto t0 = Clock::now();
  const unsigned long N = 10000;
  const LcmTable t(N);
  Integer eight_n = 1;
  unsigned long failures = 0;
  for (unsigned long n = 1; n <= N; ++n) {
    eight_n *= 8;
    if (!(t[n] * t[n] < eight_n)) ++failures;
  }
  const double secs = seconds_since(t0);
  return {failures == 0 && secs <= 30, std::to_string(failures) + " failures, " + fmt(secs) + " s"};
}

Outcome criterion5() {
  const LcmTable t(100);
  int max_bits = 0;
  for (unsigned long n = 1; n <= 100; ++n) {
    const ZetaAffine f = closed_form_I(n, 2) * Rational(t[n]);
    bool decided = false;
    for (int bits = 192; bits <= 4096; bits *= 2) {
      const CertifiedReal v = f.evaluate(bits);
      const auto pos = v.greater_than(Rational(0));
      const auto below = v.less_than(Rational(1));
      if (pos && below) {
        if (!*pos || !*below) return {false, "outside (0,1) at n=" + std::to_string(n)};
        max_bits = std::max(max_bits, bits);
        decided = true;
        break;
      }
    }
    if (!decided) return {false, "undecided at cap for n=" + std::to_string(n)};
  }
  return {true, "n=1..100 inside (0,1), max precision " + std::to_string(max_bits) + " bits"};
}

Outcome criterion6() {
  for (unsigned long n = 1; n <= 50; ++n)
    if (p_star(n, 2).floor() != 1) return {false, "m=2 n=" + std::to_string(n)};
  for (int m : {3, 4})
    for (unsigned long n = 1; n <= 20; ++n)
      if (p_star(n, m).floor() != 1) return {false, "m=" + std::to_string(m) + " n=" + std::to_string(n)};
  return {true, "exact floors equal 1"};
}

Outcome criterion7() {
  for (int m = 2; m <= 6; ++m) {
    const CertifiedReal z = zeta_value(m, 192);
    const Rational upper = Rational(1) + Rational(Integer(1), Integer(2 * m));
    if (z.greater_than(Rational(1)) != true || z.less_equal(upper) != true)
      return {false, "m=" + std::to_string(m) + " value " + z.str()};
  }
  const CertifiedReal frac = zeta_value(2, 192) - Rational(1);
  const auto gt = frac.greater_than(Rational(Integer(1), Integer(63)));
  return {gt == true, "{zeta(5)} = " + frac.str(30)};
}

Outcome criterion8() {
  int points = 0;
  for (unsigned long n : {1ul, 2ul, 4ul, 7ul, 10ul}) {
    for (int m : {2, 3, 4, 5}) {
      const CertifiedReal s = oracle_I_series(n, m, 192);
      const CertifiedReal q = oracle_I_quadrature(n, m, 192).estimate;
      if (!s.overlaps(q)) return {false, "grid point n=" + std::to_string(n) + " m=" + std::to_string(m)};
      ++points;
    }
  }
  double worst = 0;
  for (unsigned j = 0; j <= 8; ++j) {
    const auto r = reduction_identity_check(j, 192);
    const double rel = combined_relative(r.double_integral, r.single_integral);
    worst = std::max(worst, rel);
    if (!r.double_integral.overlaps(r.single_integral) || rel > 1e-30)
      return {false, "reduction identity j=" + std::to_string(j) + " error " + fmt(rel)};
  }
  return {true, std::to_string(points) + " grid points agree; reduction worst " + fmt(worst)};
}

Outcome criterion9() {
  std::mt19937_64 rng(20240611);
  const LcmTable t(15);
  for (int i = 0; i < 200; ++i) {
    const unsigned long n = 1 + rng() % 15;
    unsigned long a = 0, b = 0;
    do {
      b = 4 + rng() % 47;
      a = b + 1 + rng() % (b / 4);
    } while (std::gcd(a, b) != 1);
    const auto got = diophantine_enumerate(n, Integer(a), Integer(b), t);
    const auto ref = testing_oracles::brute_cases(t[n].get_ui(), a, b);
    if (got.size() != ref.size()) return {false, "size mismatch, sample " + std::to_string(i)};
    for (std::size_t k = 0; k < ref.size(); ++k)
      if (got[k].k != std::get<0>(ref[k]) || got[k].divisibility_holds != std::get<1>(ref[k]) ||
          got[k].equality_holds != std::get<2>(ref[k]))
        return {false, "mismatch n=" + std::to_string(n) + " a/b=" + std::to_string(a) + "/" + std::to_string(b)};
  }
  return {true, "200 samples match"};
}

Outcome criterion10() {
  const unsigned long N = 10000;
  const LcmTable t(N + 1);
  const auto ref = testing_oracles::lcm_fold_prefixes(N + 1);
  unsigned long case1 = 0, case2 = 0;
  for (unsigned long n = 1; n <= N; ++n) {
    if (t[n] != ref[n]) return {false, "d_n differs at n=" + std::to_string(n)};
    const auto pp = is_prime_power(n + 1);
    if (pp) {
      if (ref[n + 1] != ref[n] * static_cast<unsigned long>(pp->p)) return {false, "case 2 at n=" + std::to_string(n)};
      ++case2;
    } else {
      if (ref[n + 1] != ref[n]) return {false, "case 1 at n=" + std::to_string(n)};
      ++case1;
    }
  }
  return {true, std::to_string(case1) + " case-1 steps, " + std::to_string(case2) + " case-2 steps"};
}

std::string g_cli;

Outcome criterion11() {
  if (g_cli.empty()) return {false, "no CLI path given"};
  auto run = [](std::string& out) {
    const std::string cmd = g_cli + " audit --rational 83/80 --m 2 --n-max 20 --format json";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return -1;
    char buf[8192];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    const int status = pclose(p);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  std::string a, b;
  const int ca = run(a), cb = run(b);
  if (ca != 0 || cb != 0) return {false, "exit codes " + std::to_string(ca) + ", " + std::to_string(cb)};
  if (a != b) return {false, "outputs differ"};
  const auto j = nlohmann::json::parse(a);
  std::set<std::string> seen;
  for (const auto& row : j.at("rows")) seen.insert(row.at("claim").get<std::string>());
  std::string missing;
  for (const auto& k : in_scope_keys(2))
    if (!seen.count(k)) missing += " " + k;
  if (!missing.empty()) return {false, "missing keys:" + missing};
  return {true, std::to_string(a.size()) + " identical bytes, " + std::to_string(j.at("rows").size()) + " rows"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"closed form vs quadrature, m=2, n<=12", criterion1},
      {"closed form vs quadrature, m=3,4, n<=8", criterion2},
      {"log moment s=3 vs 45/2 zeta(5)", criterion3},
      {"d_n^2 < 8^n, n<=10000", criterion4},
      {"0 < d_n I_n < 1, n<=100", criterion5},
      {"floor(P*) = 1", criterion6},
      {"zeta(2m+1) ranges and {zeta(5)} > 1/63", criterion7},
      {"series vs quadrature grid, reduction identity", criterion8},
      {"Diophantine enumeration vs brute scan", criterion9},
      {"lcm table vs direct fold, case dichotomy", criterion10},
      {"audit determinism and key coverage", criterion11},
  };
  int failed = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index << ": " << name << " (" << o.detail << ")"
              << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
