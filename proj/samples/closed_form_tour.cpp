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

// Small tour: I_{n,2} three ways, the floor of P_n, and where the chain
// breaks when zeta(5) is replaced by 83/80.

#include <iostream>

#include "zetalab/audit/registry.hpp"
#include "zetalab/quad/oracles.hpp"
#include "zetalab/zeta/closed_form.hpp"

int main() {
  using namespace zetalab;
  const int bits = 128;
  for (unsigned long n = 1; n <= 4; ++n) {
    const ZetaAffine f = closed_form_I(n, 2);
    std::cout << "I_" << n << " = (" << f.alpha.str() << ") zeta(5) + (" << rational_text(f.beta, 60) << ")\n"
              << "  closed form " << f.evaluate(bits).str(30) << '\n'
              << "  quadrature  " << oracle_I_quadrature(n, 2, bits).estimate.str(30) << '\n'
              << "  series      " << oracle_I_series(n, 2, bits).str(30) << '\n'
              << "  floor(P_n)  " << p_star(n, 2).floor().get_str() << '\n';
  }

  const AuditTrace t = full_chain_audit(Integer(83), Integer(80), 2, 20);
  if (t.first_failure) {
    const ClaimReport& r = t.reports[*t.first_failure_index];
    std::cout << "zeta(5) := 83/80 first breaks at " << r.claim.key << " n=" << *r.params.n << ": " << r.note << '\n';
  }
  return 0;
}
