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

#ifndef ZETALAB_CLI_REPORT_HPP
#define ZETALAB_CLI_REPORT_HPP

#include "json.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "zetalab/audit/registry.hpp"
#include "zetalab/cli/config.hpp"

namespace zetalab::cli {

using Json = nlohmann::ordered_json;

inline Json config_json(const std::string& command, const RunConfig& cfg, const std::vector<int>& m_used) {
  Json c;
  c["precision_bits"] = cfg.precision_bits;
  c["precision_cap"] = std::max(cfg.precision_cap, cfg.precision_bits);
  c["n_max"] = cfg.n_max;
  c["m"] = m_used;
  c["rational"] = cfg.rational ? Json(cfg.rational->str()) : Json(nullptr);
  c["format"] = to_string(cfg.format);
  c["seed"] = cfg.seed ? Json(*cfg.seed) : Json(nullptr);
  c["max_level"] = cfg.max_level;
  Json h;
  h["tool"] = "zetalab";
  h["version"] = kVersion;
  h["command"] = command;
  h["config"] = std::move(c);
  return h;
}

inline Json params_json(const ClaimParams& p) {
  Json j = Json::object();
  j["n"] = p.n ? Json(*p.n) : Json(nullptr);
  j["m"] = p.m ? Json(*p.m) : Json(nullptr);
  j["rational"] = p.rational ? Json(p.rational->str()) : Json(nullptr);
  return j;
}

inline Json report_json(const ClaimReport& r) {
  Json j;
  j["claim"] = r.claim.key;
  j["anchor"] = std::string(registry_entry(r.claim.key).anchor);
  j["params"] = params_json(r.params);
  j["verdict"] = to_string(r.verdict);
  j["holds"] = r.holds();
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["provenance"] = to_string(r.provenance);
  j["precision_bits"] = r.precision_bits;
  j["escalated"] = r.escalated;
  j["note"] = r.note;
  return j;
}

struct Tally {
  std::size_t holds = 0, fails = 0, undecided = 0, vacuous = 0;
  bool all_hold() const { return fails == 0 && undecided == 0; }
};

inline Tally tally(const std::vector<ClaimReport>& rows) {
  Tally t;
  for (const auto& r : rows) {
    switch (r.verdict) {
      case Verdict::kHolds: ++t.holds; break;
      case Verdict::kFails: ++t.fails; break;
      case Verdict::kUndecided: ++t.undecided; break;
      case Verdict::kVacuous: ++t.vacuous; break;
    }
  }
  return t;
}

inline Json tally_json(const Tally& t) {
  Json j;
  j["holds"] = t.holds;
  j["fails"] = t.fails;
  j["undecided"] = t.undecided;
  j["vacuous"] = t.vacuous;
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string opt_str(const std::optional<unsigned long>& v) { return v ? std::to_string(*v) : ""; }
inline std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

/// A plain table of computed values (zeta, oracle commands).
struct ValueTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

inline void write_values(std::ostream& os, const RunConfig& cfg, const ValueTable& values, Json* json_out) {
  switch (cfg.format) {
    case Format::kJson: {
      Json arr = Json::array();
      for (const auto& row : values.rows) {
        Json o;
        for (std::size_t i = 0; i < values.columns.size(); ++i) o[values.columns[i]] = row.at(i);
        arr.push_back(std::move(o));
      }
      (*json_out)["values"] = std::move(arr);
      break;
    }
    case Format::kCsv: {
      for (std::size_t i = 0; i < values.columns.size(); ++i) os << (i ? "," : "") << csv_field(values.columns[i]);
      os << '\n';
      for (const auto& row : values.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << '\n';
      }
      break;
    }
    case Format::kText: {
      for (const auto& row : values.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << values.columns[i] << '=' << row[i];
        os << '\n';
      }
      break;
    }
  }
}

inline void write_text_header(std::ostream& os, const std::string& command, const RunConfig& cfg,
                              const std::vector<int>& m_used) {
  os << "# zetalab " << kVersion << ' ' << command << ": prec_bits=" << cfg.precision_bits
     << " n_max=" << cfg.n_max << " m=";
  for (std::size_t i = 0; i < m_used.size(); ++i) os << (i ? "," : "") << m_used[i];
  if (cfg.rational) os << " rational=" << cfg.rational->str();
  if (cfg.seed) os << " seed=" << *cfg.seed;
  os << '\n';
}

/// Writes an optional value table and a trace in the configured format.
/// The output depends only on its inputs, so equal runs give equal bytes.
/// CSV output carries the value table first, then a blank line and the
/// claim rows.
inline void write_output(std::ostream& os, const std::string& command, const RunConfig& cfg,
                         const std::vector<int>& m_used, const ValueTable* values, const AuditTrace& trace) {
  const Tally t = tally(trace.reports);
  switch (cfg.format) {
    case Format::kJson: {
      Json out = config_json(command, cfg, m_used);
      if (values) write_values(os, cfg, *values, &out);
      Json rows = Json::array();
      for (const auto& r : trace.reports) rows.push_back(report_json(r));
      out["rows"] = std::move(rows);
      if (trace.first_failure) {
        Json ff;
        ff["claim"] = trace.first_failure->key;
        ff["index"] = *trace.first_failure_index;
        ff["params"] = params_json(trace.reports[*trace.first_failure_index].params);
        out["first_failure"] = std::move(ff);
      } else {
        out["first_failure"] = nullptr;
      }
      out["summary"] = tally_json(t);
      os << out.dump(2) << '\n';
      break;
    }
    case Format::kCsv: {
      if (values) {
        write_values(os, cfg, *values, nullptr);
        os << '\n';
      }
      os << "claim,n,m,rational,verdict,lhs,rhs,provenance,precision_bits,note\n";
      for (const auto& r : trace.reports) {
        os << csv_field(r.claim.key) << ',' << opt_str(r.params.n) << ',' << opt_str(r.params.m) << ','
           << (r.params.rational ? r.params.rational->str() : "") << ',' << to_string(r.verdict) << ','
           << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ',' << to_string(r.provenance) << ','
           << r.precision_bits << ',' << csv_field(r.note) << '\n';
      }
      break;
    }
    case Format::kText: {
      write_text_header(os, command, cfg, m_used);
      if (values) write_values(os, cfg, *values, nullptr);
      for (const auto& r : trace.reports) {
        os << r.claim.key;
        if (r.params.n) os << " n=" << *r.params.n;
        if (r.params.m) os << " m=" << *r.params.m;
        os << ' ' << to_string(r.verdict) << " [" << to_string(r.provenance) << "]";
        if (!r.lhs.empty()) os << " lhs=" << r.lhs;
        if (!r.rhs.empty()) os << " rhs=" << r.rhs;
        if (!r.note.empty()) os << " (" << r.note << ")";
        os << '\n';
      }
      if (trace.first_failure) {
        const auto& r = trace.reports[*trace.first_failure_index];
        os << "# first failure: " << r.claim.key;
        if (r.params.n) os << " n=" << *r.params.n;
        os << '\n';
      }
      os << "# holds=" << t.holds << " fails=" << t.fails << " undecided=" << t.undecided
         << " vacuous=" << t.vacuous << '\n';
      break;
    }
  }
}

}  // namespace zetalab::cli

#endif  // ZETALAB_CLI_REPORT_HPP
