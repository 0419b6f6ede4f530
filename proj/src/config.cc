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

#include "bundlepmg/config.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bundlepmg/errors.h"

namespace bundlepmg {

double Axis::Value(int index) const {
  if (steps <= 1) return min;
  if (index == steps - 1) return max;
  return min + (max - min) * index / (steps - 1);
}

std::string Panel::Label() const {
  std::string out;
  for (const auto& [key, value] : overrides) {
    if (!out.empty()) out += ' ';
    std::ostringstream v;
    v.imbue(std::locale::classic());
    v << value;
    out += key + "=" + v.str();
  }
  return out;
}

void Panel::Apply(MarketParams& params) const {
  for (const auto& [key, value] : overrides) SetParam(params, key, value);
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Words(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double ParseNumber(std::string_view text, int line, std::string_view what) {
  double v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError(line, "expected a finite number for " +
                                std::string(what) + ", got '" +
                                std::string(text) + "'");
  }
  return v;
}

void RequireParamKey(std::string_view key, int line) {
  if (!IsParamKey(key)) {
    throw ConfigError(line, "unknown parameter '" + std::string(key) + "'");
  }
}

Axis ParseAxis(std::string_view value, int line) {
  const auto w = Words(value);
  if (w.size() != 4) {
    throw ConfigError(line, "axis needs 'name min max steps'");
  }
  RequireParamKey(w[0], line);
  Axis axis;
  axis.name = std::string(w[0]);
  axis.min = ParseNumber(w[1], line, "axis min");
  axis.max = ParseNumber(w[2], line, "axis max");
  const double steps = ParseNumber(w[3], line, "axis steps");
  if (steps < 1 || steps != std::floor(steps) || steps > 100000) {
    throw ConfigError(line, "axis steps must be a positive integer");
  }
  axis.steps = static_cast<int>(steps);
  if (axis.steps == 1 && axis.min != axis.max) {
    throw ConfigError(line, "a single-step axis needs min == max");
  }
  if (axis.steps > 1 && !(axis.min < axis.max)) {
    throw ConfigError(line, "axis min must be below max");
  }
  return axis;
}

Panel ParsePanel(std::string_view value, int line) {
  Panel panel;
  for (std::string_view item : Words(value)) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line, "panel entries look like key=value");
    }
    const std::string_view key = item.substr(0, eq);
    RequireParamKey(key, line);
    panel.overrides.emplace_back(
        std::string(key), ParseNumber(item.substr(eq + 1), line, key));
  }
  if (panel.overrides.empty()) throw ConfigError(line, "empty panel");
  return panel;
}

}  // namespace

Config ParseConfig(std::string_view text) {
  Config config;
  enum class Section { kParams, kSweep } section = Section::kParams;
  bool have_axis1 = false;
  bool have_axis2 = false;
  int line_no = 0;
  int sweep_line = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line == "[params]") {
        section = Section::kParams;
      } else if (line == "[sweep]") {
        section = Section::kSweep;
        if (!config.sweep) {
          config.sweep.emplace();
          sweep_line = line_no;
        }
      } else {
        throw ConfigError(line_no,
                          "unknown section '" + std::string(line) + "'");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "expected 'key = value'");
    }
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "missing key");
    if (value.empty()) {
      throw ConfigError(line_no, "missing value for '" + std::string(key) + "'");
    }

    if (section == Section::kParams) {
      RequireParamKey(key, line_no);
      SetParam(config.params, key, ParseNumber(value, line_no, key));
    } else if (key == "name") {
      for (char ch : value) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' &&
            ch != '-') {
          throw ConfigError(line_no,
                            "sweep name may use letters, digits, '_' and '-'");
        }
      }
      config.sweep->name = std::string(value);
    } else if (key == "axis1") {
      config.sweep->axis1 = ParseAxis(value, line_no);
      have_axis1 = true;
    } else if (key == "axis2") {
      config.sweep->axis2 = ParseAxis(value, line_no);
      have_axis2 = true;
    } else if (key == "panel") {
      config.sweep->panels.push_back(ParsePanel(value, line_no));
    } else {
      throw ConfigError(line_no,
                        "unknown sweep key '" + std::string(key) + "'");
    }
  }

  if (config.sweep) {
    if (!have_axis1 || !have_axis2) {
      throw ConfigError(sweep_line, "[sweep] needs both axis1 and axis2");
    }
    const SweepSpec& s = *config.sweep;
    if (s.axis1.name == s.axis2.name) {
      throw ConfigError(sweep_line, "axes must name distinct parameters");
    }
    for (const Panel& panel : s.panels) {
      for (const auto& [key, unused] : panel.overrides) {
        if (key == s.axis1.name || key == s.axis2.name) {
          throw ConfigError(sweep_line,
                            "panel overrides axis parameter '" + key + "'");
        }
      }
    }
  }
  return config;
}

Config LoadConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(0, "cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str());
}

}  // namespace bundlepmg
