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

// zetalab command-line front end.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "zetalab/cli/commands.hpp"

namespace {

using zetalab::cli::RunConfig;
using zetalab::cli::UsageError;

struct Flags {
  std::string config_file;
  std::string prec_bits, precision_cap, n_max, m, rational, format, seed, max_level;
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config_file, "key=value settings file (flags win)");
  sub->add_option("--prec-bits", f.prec_bits, "working precision in bits (default 192, env ZETALAB_PREC_BITS)");
  sub->add_option("--precision-cap", f.precision_cap, "escalation cap in bits (default 4096)");
  sub->add_option("--n-max", f.n_max, "largest n (default 20)");
  sub->add_option("--m", f.m, "comma-separated list of m >= 2");
  sub->add_option("--rational", f.rational, "substituted value a/b (audit)");
  sub->add_option("--format", f.format, "json, csv or text (default text)");
  sub->add_option("--seed", f.seed, "seed for randomized sweeps");
  sub->add_option("--max-level", f.max_level, "maximum tanh-sinh level (default 12)");
}

RunConfig resolve(const Flags& f) {
  RunConfig cfg;
  zetalab::cli::apply_environment(cfg);
  if (!f.config_file.empty()) zetalab::cli::load_config_file(cfg, f.config_file);
  const std::pair<const char*, const std::string*> settings[] = {
      {"prec_bits", &f.prec_bits}, {"precision_cap", &f.precision_cap}, {"n_max", &f.n_max},
      {"m", &f.m},                 {"rational", &f.rational},           {"format", &f.format},
      {"seed", &f.seed},           {"max_level", &f.max_level}};
  for (const auto& [key, value] : settings)
    if (!value->empty()) zetalab::cli::apply_setting(cfg, key, *value);
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zetalab: certified checks for Beukers-type zeta integrals"};
  app.set_version_flag("--version", zetalab::cli::kVersion);
  app.require_subcommand(1);

  Flags flags;
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&, std::ostream&);
  };
  const Command commands[] = {
      {"lemma", "closed form of I_{n,m} against both oracles", zetalab::cli::cmd_lemma},
      {"bounds", "d_n growth, integral bounds and floor claims", zetalab::cli::cmd_bounds},
      {"audit", "substitute zeta(2m+1) := a/b into every claim", zetalab::cli::cmd_audit},
      {"zeta", "certified zeta(2m+1), eta(2m+1) and fractional part", zetalab::cli::cmd_zeta},
      {"oracle", "direct evaluation of I_{n,m} by all three routes", zetalab::cli::cmd_oracle},
  };
  for (const auto& c : commands) add_flags(app.add_subcommand(c.name, c.help), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : zetalab::cli::kExitUsage;
  }

  try {
    const RunConfig cfg = resolve(flags);
    for (const auto& c : commands)
      if (app.got_subcommand(c.name)) return c.run(cfg, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "zetalab: " << e.what() << "\n" << app.help();
    return zetalab::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "zetalab: " << e.what() << '\n';
    return zetalab::cli::kExitClaimFailed;
  }
  return zetalab::cli::kExitUsage;
}
