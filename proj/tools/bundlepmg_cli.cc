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

// Command-line front end: solve, table, sweep and verify.
//
// Exit codes: 0 success, 1 input error, 2 no equilibrium (solve), 3 oracle
// disagreement (verify).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bundlepmg/config.h"
#include "bundlepmg/errors.h"
#include "bundlepmg/policy.h"
#include "bundlepmg/report.h"
#include "bundlepmg/sweep.h"

namespace {

using namespace bundlepmg;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNoEquilibrium = 2;
constexpr int kMismatch = 3;

struct Options {
  std::string config;
  std::vector<std::string> pmg;
  int bundling = 1;
  std::string out;
  std::string verify;
  double tol = 1e-9;
  int threads = 1;
  bool json = false;
  double max_deviation = 1e-4;
};

Config ReadConfig(const Options& opt) {
  return opt.config.empty() ? Config{} : LoadConfig(opt.config);
}

Scenario ParseScenario(const Options& opt) {
  bool r1 = false;
  bool r2 = false;
  for (const std::string& item : opt.pmg) {
    const auto eq = item.find('=');
    const std::string who = item.substr(0, eq);
    const std::string what = eq == std::string::npos ? "" : item.substr(eq + 1);
    if ((who != "r1" && who != "r2") || (what != "cm" && what != "nocm")) {
      throw Error("--pmg expects r1=<cm|nocm> r2=<cm|nocm>, got '" + item + "'");
    }
    (who == "r1" ? r1 : r2) = what == "cm";
  }
  return Scenario::Make(opt.bundling == 1, r1, r2);
}

SolveOptions MakeSolveOptions(const Options& opt) {
  SolveOptions s;
  s.feasibility.tol = opt.tol;
  return s;
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

int RunSolve(const Options& opt) {
  const Config config = ReadConfig(opt);
  ValidateParams(config.params);
  SolveOptions options = MakeSolveOptions(opt);
  if (!opt.verify.empty()) {
    if (opt.verify != "oracle") throw Error("--verify supports only 'oracle'");
    options.cross_check_oracle = true;
  }
  const SubgameSolution s =
      SolveSubgame(config.params, ParseScenario(opt), options);
  if (opt.json) {
    std::cout << SolveJson(s).dump(2) << "\n";
  } else {
    std::cout << SolveText(s);
  }
  return s.chosen ? kOk : kNoEquilibrium;
}

int RunTable(const Options& opt) {
  const Config config = ReadConfig(opt);
  ValidateParams(config.params);
  const PolicyComparison cmp =
      ComparePolicies(config.params, MakeSolveOptions(opt));
  const Table table = EquilibriumTable(cmp);
  if (opt.out.empty()) {
    std::cout << (opt.json ? table.Json().dump(2) + "\n" : table.Csv());
  } else {
    std::filesystem::create_directories(opt.out);
    const std::filesystem::path dir(opt.out);
    WriteFile(dir / "table.csv", table.Csv());
    if (opt.json) WriteFile(dir / "table.json", table.Json().dump(2) + "\n");
  }
  if (!cmp.tie_break.empty()) std::cerr << "tie-break: " << cmp.tie_break << "\n";
  return kOk;
}

int RunSweep(const Options& opt) {
  if (opt.config.empty()) throw Error("sweep needs --config with a [sweep]");
  const Config config = LoadConfig(opt.config);
  if (!config.sweep) throw ConfigError(0, "config has no [sweep] section");
  const SweepSpec& spec = *config.sweep;
  std::vector<Panel> panels = spec.panels;
  if (panels.empty()) panels.emplace_back();

  const std::filesystem::path dir(opt.out.empty() ? "." : opt.out);
  std::filesystem::create_directories(dir);
  for (const Panel& panel : panels) {
    const auto cells = RunGrid(config.params, spec, panel, opt.threads,
                               MakeSolveOptions(opt));
    const Table table = GridTable(spec, cells);
    const std::string stem = PanelFileStem(spec, panel);
    WriteFile(dir / (stem + ".csv"), table.Csv());
    if (opt.json) WriteFile(dir / (stem + ".json"), table.Json().dump(2) + "\n");
    int existing = 0;
    for (const GridCell& c : cells) existing += c.exists;
    std::cout << (dir / (stem + ".csv")).string() << ": " << cells.size()
              << " cells, " << existing << " with both equilibria\n";
  }
  return kOk;
}

int RunVerify(const Options& opt) {
  const Config config = ReadConfig(opt);
  ValidateParams(config.params);
  SolveOptions options = MakeSolveOptions(opt);
  options.cross_check_oracle = true;
  bool all_ok = true;
  for (const Scenario& scenario : AllScenarios()) {
    const SubgameSolution s = SolveSubgame(config.params, scenario, options);
    std::string verdict;
    if (!s.chosen) {
      verdict = "no closed-form equilibrium; oracle " +
                std::string(s.oracle->converged ? "converged" : "did not converge");
    } else if (!s.oracle_gap) {
      verdict = "MISMATCH oracle did not converge";
      all_ok = false;
    } else if (*s.oracle_gap > opt.max_deviation) {
      verdict = "MISMATCH deviation " + FormatNumber(*s.oracle_gap);
      all_ok = false;
    } else {
      verdict = "ok deviation " + FormatNumber(*s.oracle_gap);
    }
    std::cout << scenario.Label() << ": " << verdict << "\n";
  }
  return all_ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bundling and price-matching equilibria"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "key = value config file");
    sub->add_option("--tol", opt.tol, "feasibility tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", opt.json, "emit JSON");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve one subgame");
  add_common(solve);
  solve->add_option("--pmg", opt.pmg, "r1=<cm|nocm> r2=<cm|nocm>")
      ->expected(1, 2);
  solve->add_option("--bundling", opt.bundling, "0 or 1")
      ->check(CLI::IsMember({0, 1}));
  solve->add_option("--verify", opt.verify, "cross-check: oracle");

  CLI::App* table = app.add_subcommand("table", "five-subgame table");
  add_common(table);
  table->add_option("--out", opt.out, "output directory");

  CLI::App* sweep = app.add_subcommand("sweep", "grid sweep from [sweep]");
  add_common(sweep);
  sweep->add_option("--out", opt.out, "output directory");
  sweep->add_option("--threads", opt.threads, "worker threads")
      ->check(CLI::Range(1, 1024));

  CLI::App* verify = app.add_subcommand("verify", "oracle cross-check");
  add_common(verify);
  verify->add_option("--max-deviation", opt.max_deviation,
                     "allowed relative price gap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (solve->parsed()) return RunSolve(opt);
    if (table->parsed()) return RunTable(opt);
    if (sweep->parsed()) return RunSweep(opt);
    return RunVerify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
