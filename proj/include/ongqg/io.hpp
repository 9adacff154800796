// Copyright 2026 The ongqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// File formats.  CSV cells use printf %.17g so a rerun with the same inputs
// is byte-identical.  Summaries are JSON with sorted keys for the same reason.

#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ongqg/table1.hpp"
#include "ongqg/trajectory.hpp"

namespace ongqg {

using json = nlohmann::json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string format_cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_csv(const std::string& path, const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) f << ',';
    f << header[i];
  }
  f << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) f << ',';
      f << format_cell(row[i]);
    }
    f << '\n';
  }
  if (!f) throw std::runtime_error("write failed: " + path);
}

inline json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config: " + path);
  json j;
  try {
    f >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("bad JSON in ") + path + ": " + e.what());
  }
  return j;
}

inline void write_json(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << j.dump(2) << '\n';
  if (!f) throw std::runtime_error("write failed: " + path);
}

// ----- schema pieces ----------------------------------------------------------------

inline json to_json(const BaselineProfile& b) {
  json j;
  j["kind"] = b.kind == BaselineProfile::Kind::Constant ? "constant" : "half_sine_sq_ramp";
  j["value"] = b.value;
  return j;
}

inline json to_json(const AngleSeries& s) {
  json j;
  j["base"] = to_json(s.base);
  json terms = json::array();
  for (const auto& t : s.terms) terms.push_back({{"a", t.a}, {"b", t.b}, {"c", t.c}});
  j["terms"] = terms;
  return j;
}

inline json to_json(const AnsatzParams& p) {
  json j;
  j["tau"] = p.tau;
  j["theta"] = to_json(p.theta);
  j["phi"] = to_json(p.phi);
  return j;
}

inline Table1Row row_from_json(const json& j) {
  Table1Row r;
  r.scenario = j.at("scenario").get<int>();
  r.gate = j.at("gate").get<std::string>();
  const auto& at = j.at("a_theta");
  const auto& ap = j.at("a_phi");
  if (at.size() != 4 || ap.size() != 4) throw ConfigError("coefficient arrays must have 4 entries");
  for (int i = 0; i < 4; ++i) {
    r.a_theta[i] = at[i].get<double>();
    r.a_phi[i] = ap[i].get<double>();
  }
  if (j.contains("s_over_pi") && !j.at("s_over_pi").is_null()) {
    r.s_over_pi = j.at("s_over_pi").get<double>();
  }
  return r;
}

inline std::vector<Table1Row> load_rows(const std::string& path) {
  const json j = load_json(path);
  std::vector<Table1Row> rows;
  for (const auto& item : j.at("rows")) rows.push_back(row_from_json(item));
  return rows;
}

}  // namespace ongqg
