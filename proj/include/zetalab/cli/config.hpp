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

#ifndef ZETALAB_CLI_CONFIG_HPP
#define ZETALAB_CLI_CONFIG_HPP

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetalab/audit/claim.hpp"
#include "zetalab/exact/rational.hpp"

namespace zetalab::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kPrecisionEnv = "ZETALAB_PREC_BITS";

enum class Format { kJson, kCsv, kText };

inline const char* to_string(Format f) {
  switch (f) {
    case Format::kJson: return "json";
    case Format::kCsv: return "csv";
    case Format::kText: return "text";
  }
  return "?";
}

/// Malformed flags, config lines or values; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  if (s == "text") return Format::kText;
  throw UsageError("format must be json, csv or text, got '" + s + "'");
}

inline long parse_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError(what + ": not an integer: '" + s + "'");
  return v;
}

inline std::vector<int> parse_m_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const long m = parse_long(item, "--m");
    if (m < 2 || m > 64) throw UsageError("--m: values must be in [2, 64], got " + item);
    out.push_back(static_cast<int>(m));
  }
  if (out.empty()) throw UsageError("--m: empty list");
  return out;
}

/// "a/b" with positive coprime a and b; a bare integer means b = 1.
inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  Integer a, b = 1;
  const bool ok = a.set_str(s.substr(0, slash), 10) == 0 &&
                  (slash == std::string::npos || b.set_str(s.substr(slash + 1), 10) == 0);
  if (!ok) throw UsageError("--rational: expected a/b, got '" + s + "'");
  if (a <= 0 || b <= 0) throw UsageError("--rational: a and b must be positive");
  if (gcd(a, b) != 1) throw UsageError("--rational: a and b must be coprime");
  return Rational(a, b);
}

struct RunConfig {
  int precision_bits = 192;
  int precision_cap = 4096;
  unsigned long n_max = 20;
  std::optional<std::vector<int>> m_list;  // empty: command default
  std::optional<Rational> rational;
  Format format = Format::kText;
  std::optional<std::uint64_t> seed;
  int max_level = 12;

  std::vector<int> m_or(std::vector<int> fallback) const { return m_list ? *m_list : fallback; }

  PrecisionPolicy policy() const {
    PrecisionPolicy p;
    p.precision_bits = precision_bits;
    p.precision_cap = std::max(precision_cap, precision_bits);
    p.quadrature.max_level = max_level;
    return p;
  }

  void validate() const {
    if (precision_bits < 64) throw UsageError("precision_bits must be >= 64");
    if (n_max < 1) throw UsageError("n_max must be >= 1");
    if (max_level < 4 || max_level > 20) throw UsageError("max_level must be in [4, 20]");
  }
};

/// Applies one key=value setting; keys match the long flag names with
/// dashes or underscores.
inline void apply_setting(RunConfig& cfg, std::string key, const std::string& value) {
  for (auto& ch : key)
    if (ch == '-') ch = '_';
  if (key == "prec_bits" || key == "precision_bits") {
    cfg.precision_bits = static_cast<int>(parse_long(value, key));
  } else if (key == "precision_cap") {
    cfg.precision_cap = static_cast<int>(parse_long(value, key));
  } else if (key == "n_max") {
    const long n = parse_long(value, key);
    if (n < 1) throw UsageError("n_max must be >= 1");
    cfg.n_max = static_cast<unsigned long>(n);
  } else if (key == "m") {
    cfg.m_list = parse_m_list(value);
  } else if (key == "rational") {
    cfg.rational = parse_rational(value);
  } else if (key == "format") {
    cfg.format = parse_format(value);
  } else if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(parse_long(value, key));
  } else if (key == "max_level") {
    cfg.max_level = static_cast<int>(parse_long(value, key));
  } else {
    throw UsageError("unknown setting '" + key + "'");
  }
}

/// Reads a key=value file. Blank lines and lines starting with '#' are
/// skipped.
inline void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

/// Default precision from the environment, if set.
inline void apply_environment(RunConfig& cfg) {
  if (const char* v = std::getenv(kPrecisionEnv); v && *v)
    cfg.precision_bits = static_cast<int>(parse_long(v, kPrecisionEnv));
}

}  // namespace zetalab::cli

#endif  // ZETALAB_CLI_CONFIG_HPP
