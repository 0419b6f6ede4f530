// Copyright 2026 The bundlepmg Authors
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

#include "bundlepmg/report.h"

#include <array>
#include <charconv>
#include <cmath>

namespace bundlepmg {

std::string FormatNumber(double value) {
  if (value == 0) return "0";
  std::array<char, 64> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(),
                                       value, std::chars_format::general, 6);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), ptr);
}

namespace {

double Rounded(double value) {
  const std::string text = FormatNumber(value);
  double out = 0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

std::string CsvEscape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string Table::Csv() const {
  std::string out;
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += CsvEscape(columns[i]);
  }
  out += '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (const double* v = std::get_if<double>(&row[i])) {
        out += FormatNumber(*v);
      } else if (const std::string* s = std::get_if<std::string>(&row[i])) {
        out += CsvEscape(*s);
      }
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json Table::Json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (size_t i = 0; i < columns.size(); ++i) {
      const Field& f = row[i];
      if (const double* v = std::get_if<double>(&f)) {
        obj[columns[i]] = Rounded(*v);
      } else if (const std::string* s = std::get_if<std::string>(&f)) {
        obj[columns[i]] = *s;
      } else {
        obj[columns[i]] = nullptr;
      }
    }
    out.push_back(std::move(obj));
  }
  return out;
}

Table EquilibriumTable(const PolicyComparison& comparison) {
  Table t;
  t.columns = {"scenario", "p1", "p2", "pb1", "pb2"};
  for (std::string_view key : DemandKeys()) t.columns.emplace_back(key);
  t.columns.insert(t.columns.end(), {"pi_r1_k", "pi_r2_k", "welfare_k"});

  for (const SubgameSolution& sub : comparison.subgames) {
    std::vector<Field> row(t.columns.size());
    row[0] = sub.scenario.Label();
    if (sub.chosen) {
      const EquilibriumResult& r = *sub.chosen;
      size_t c = 1;
      row[c++] = r.prices.item1;
      row[c++] = r.prices.item2;
      row[c++] = r.prices.R1BundleEquivalent();
      row[c++] = r.prices.bundle2;
      for (double d : r.demands.AsArray()) row[c++] = d;
      row[c++] = r.profits.r1 / 1000;
      row[c++] = r.profits.r2 / 1000;
      row[c++] = r.profits.welfare / 1000;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table GridTable(const SweepSpec& spec, const std::vector<GridCell>& cells) {
  Table t;
  t.columns = {spec.axis1.name, spec.axis2.name, "exists", "delta_pi_B",
               "best_regime"};
  for (const GridCell& cell : cells) {
    std::vector<Field> row(t.columns.size());
    row[0] = cell.value1;
    row[1] = cell.value2;
    row[2] = cell.exists ? 1.0 : 0.0;
    if (cell.exists) {
      row[3] = *cell.delta_pi_bundling;
      row[4] = *cell.best_regime;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string PanelFileStem(const SweepSpec& spec, const Panel& panel) {
  std::string stem = spec.name;
  for (const auto& [key, value] : panel.overrides) {
    stem += "_" + key + "-" + FormatNumber(value);
  }
  return stem;
}

namespace {

std::string PriceLine(const PriceVector& p) {
  std::string out = "p1=" + FormatNumber(p.item1) +
                    " p2=" + FormatNumber(p.item2);
  if (p.bundle1) out += " pb1=" + FormatNumber(*p.bundle1);
  return out + " pb2=" + FormatNumber(p.bundle2);
}

nlohmann::ordered_json PricesJson(const PriceVector& p) {
  nlohmann::ordered_json j;
  j["p1"] = p.item1;
  j["p2"] = p.item2;
  j["pb1"] = p.bundle1 ? nlohmann::ordered_json(*p.bundle1) : nullptr;
  j["pb2"] = p.bundle2;
  return j;
}

nlohmann::ordered_json ResultJson(const EquilibriumResult& r) {
  nlohmann::ordered_json j;
  j["branch"] = std::string(BranchName(r.branch));
  j["regime"] = std::string(RegimeName(r.regime));
  j["feasible"] = r.feasible;
  j["prices"] = PricesJson(r.prices);
  nlohmann::ordered_json d;
  const auto demand = r.demands.AsArray();
  for (size_t i = 0; i < demand.size(); ++i) {
    d[std::string(DemandKeys()[i])] = demand[i];
  }
  j["demands"] = d;
  j["profits_k"] = {{"r1", r.profits.r1 / 1000},
                    {"r2", r.profits.r2 / 1000},
                    {"welfare", r.profits.welfare / 1000}};
  nlohmann::ordered_json cond;
  cond["set"] = std::string(1, r.conditions.set_id);
  cond["satisfied"] = r.conditions.all_satisfied;
  cond["lines"] = nlohmann::ordered_json::array();
  for (const ConditionLine& line : r.conditions.lines) {
    cond["lines"].push_back({{"condition", line.label},
                             {"lhs", line.lhs},
                             {"rhs", line.rhs},
                             {"satisfied", line.satisfied}});
  }
  j["conditions"] = cond;
  j["foc_residual"] = r.foc_residual;
  j["violations"] = r.violations;
  return j;
}

}  // namespace

std::string SolveText(const SubgameSolution& s) {
  std::string out = "subgame " + s.scenario.Label() + "\n";
  if (!s.chosen) {
    out += "chosen NONE\n";
  } else {
    const EquilibriumResult& r = *s.chosen;
    out += "chosen " + std::string(BranchName(r.branch)) + " (regime " +
           std::string(RegimeName(r.regime)) + ")\n";
    out += "prices " + PriceLine(r.prices) + "\n";
    out += "demands";
    const auto demand = r.demands.AsArray();
    for (size_t i = 0; i < demand.size(); ++i) {
      out += " " + std::string(DemandKeys()[i]) + "=" +
             FormatNumber(demand[i]);
    }
    out += "\nprofits_k r1=" + FormatNumber(r.profits.r1 / 1000) +
           " r2=" + FormatNumber(r.profits.r2 / 1000) +
           " welfare=" + FormatNumber(r.profits.welfare / 1000) + "\n";
    out += std::string("conditions set ") + r.conditions.set_id + ": " +
           (r.conditions.all_satisfied ? "satisfied" : "not satisfied") + "\n";
    for (const ConditionLine& line : r.conditions.lines) {
      out += "  " + line.label + "  [" + FormatNumber(line.lhs) + " " +
             line.relation + " " + FormatNumber(line.rhs) + "] " +
             (line.satisfied ? "ok" : "fails") + "\n";
    }
    out += "foc_residual " + FormatNumber(r.foc_residual) + "\n";
  }
  for (const std::string& w : s.warnings) out += "warning " + w + "\n";
  for (const EquilibriumResult& c : s.candidates) {
    if (c.feasible) continue;
    out += "rejected " + std::string(BranchName(c.branch)) + ":";
    for (const std::string& v : c.violations) out += " " + v + ";";
    out += "\n";
  }
  if (s.oracle) {
    const OracleOutcome& o = *s.oracle;
    out += "oracle " + std::string(o.converged ? "converged" : "did not converge") +
           " after " + std::to_string(o.iterations) + " iterations at " +
           PriceLine(o.prices);
    if (s.oracle_gap) {
      out += "; max relative deviation " + FormatNumber(*s.oracle_gap);
    }
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json SolveJson(const SubgameSolution& s) {
  nlohmann::ordered_json j;
  j["scenario"] = s.scenario.Label();
  j["chosen"] = s.chosen ? ResultJson(*s.chosen) : nlohmann::ordered_json();
  j["candidates"] = nlohmann::ordered_json::array();
  for (const EquilibriumResult& c : s.candidates) {
    j["candidates"].push_back(ResultJson(c));
  }
  j["warnings"] = s.warnings;
  if (s.oracle) {
    nlohmann::ordered_json o;
    o["converged"] = s.oracle->converged;
    o["iterations"] = s.oracle->iterations;
    o["prices"] = PricesJson(s.oracle->prices);
    o["max_relative_deviation"] =
        s.oracle_gap ? nlohmann::ordered_json(*s.oracle_gap) : nullptr;
    j["oracle"] = o;
  }
  return j;
}

}  // namespace bundlepmg
