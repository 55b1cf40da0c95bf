// Copyright 2026 The Confix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "confix/session/session.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "confix/syntax/parser.hpp"
#include "confix/syntax/printer.hpp"

namespace confix {

namespace {

int to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::runtime_error("config key '" + key + "' needs an integer, got '" + value + "'");
}

Rational to_rational(const std::string& key, const std::string& value) {
  try {
    return parse_rational(value);
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("config key '" + key + "' needs a number, got '" + value + "'");
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

std::string SessionConfig::validate() const {
  if (std::string s = scores.validate(); !s.empty()) return s;
  if (generation.tests < 0) return "tests must be non-negative";
  if (generation.max_steps <= 0) return "max_steps must be positive";
  if (max_components <= 0 || top <= 0 || jobs <= 0) {
    return "max_components, top and jobs must be positive";
  }
  if (caps.max_passing <= 0 || caps.max_failing <= 0) return "test caps must be positive";
  if (run.step_budget <= 0) return "step_budget must be positive";
  return {};
}

std::vector<std::pair<std::string, std::string>> SessionConfig::describe() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("program", std::filesystem::path(program_path).filename().string());
  if (!suite_path.empty()) {
    out.emplace_back("suite", std::filesystem::path(suite_path).filename().string());
  } else {
    out.emplace_back("seed", std::to_string(generation.seed));
    out.emplace_back("tests", std::to_string(generation.tests));
    out.emplace_back("max_steps", std::to_string(generation.max_steps));
    out.emplace_back("targets", generation.target_classes.empty()
                                    ? std::string("all")
                                    : join(generation.target_classes, ","));
  }
  out.emplace_back("alpha", scores.alpha.str());
  out.emplace_back("beta", scores.beta.str());
  out.emplace_back("gamma", scores.gamma.str());
  out.emplace_back("max_passing", std::to_string(caps.max_passing));
  out.emplace_back("max_failing", std::to_string(caps.max_failing));
  out.emplace_back("max_components", std::to_string(max_components));
  out.emplace_back("top", std::to_string(top));
  out.emplace_back("step_budget", std::to_string(run.step_budget));
  return out;
}

void apply_config(SessionConfig& config, const ConfigFile& file) {
  for (const auto& [key, value] : file.entries) {
    if (key == "seed") {
      try {
        config.generation.seed = std::stoull(value);
      } catch (const std::exception&) {
        throw std::runtime_error("config key 'seed' needs an integer, got '" + value + "'");
      }
    } else if (key == "tests") {
      config.generation.tests = to_int(key, value);
    } else if (key == "max_steps") {
      config.generation.max_steps = to_int(key, value);
    } else if (key == "targets") {
      config.generation.target_classes.clear();
      std::stringstream in(value);
      std::string name;
      while (std::getline(in, name, ',')) {
        const auto b = name.find_first_not_of(' ');
        const auto e = name.find_last_not_of(' ');
        if (b != std::string::npos) config.generation.target_classes.push_back(name.substr(b, e - b + 1));
      }
    } else if (key == "alpha") {
      config.scores.alpha = to_rational(key, value);
    } else if (key == "beta") {
      config.scores.beta = to_rational(key, value);
    } else if (key == "gamma") {
      config.scores.gamma = to_rational(key, value);
    } else if (key == "max_components") {
      config.max_components = to_int(key, value);
    } else if (key == "top") {
      config.top = to_int(key, value);
    } else if (key == "jobs") {
      config.jobs = to_int(key, value);
    } else if (key == "step_budget") {
      config.run.step_budget = to_int(key, value);
      config.generation.run.step_budget = config.run.step_budget;
    } else if (key == "max_passing") {
      config.caps.max_passing = to_int(key, value);
    } else if (key == "max_failing") {
      config.caps.max_failing = to_int(key, value);
    }
  }
}

Program load_program(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream text;
  text << in.rdbuf();
  return parse_program(text.str());
}

TestSuite obtain_suite(const Program& program, const SessionConfig& config) {
  if (config.suite_path.empty()) return generate_suite(program, config.generation);
  std::ifstream in(config.suite_path);
  if (!in) throw std::runtime_error("cannot read " + config.suite_path);
  return read_suite(in, program);
}

void write_test_summary(std::ostream& out, const Program& program, const TestSuite& suite) {
  out << "tests: " << suite.tests.size() << "\n";
  for (Verdict v : {Verdict::kPass, Verdict::kFail, Verdict::kInvalid, Verdict::kTimeout}) {
    out << to_string(v) << ": " << suite.count(v) << "\n";
  }
  const auto faults = suite.failing();
  out << "faults: " << faults.size() << "\n";
  for (const auto& [key, tests] : faults) {
    out << "  " << format_fault_key(program, key) << "  " << tests.size() << " failing\n";
  }
}

LocalizeOutcome run_localization(const Program& program, const TestSuite& suite,
                                 const FaultKey& fault, const SessionConfig& config) {
  LocalizeOutcome out;
  out.inputs = select_fault_inputs(program, suite, fault, config.caps, config.run);
  const std::string name = format_fault_key(program, fault);
  if (out.inputs.failing.empty()) throw std::runtime_error("no failing test raises " + name);
  auto context = find_fault_context(program, fault, out.inputs.failing, config.run);
  if (!context) throw std::runtime_error(name + " is a call on Void; nothing to localize");
  LocalizationConfig lc;
  lc.scores = config.scores;
  lc.jobs = config.jobs;
  lc.run = config.run;
  out.localization = localize(program, *context, out.inputs, lc);
  return out;
}

FixOutcome run_fix(const Program& program, const TestSuite& suite, const FaultKey& fault,
                   const SessionConfig& config) {
  FixOutcome out;
  out.localized = run_localization(program, suite, fault, config);
  FixgenConfig fc;
  fc.max_components = config.max_components;
  FixgenStats stats;
  out.candidates = generate_candidates(program, out.localized.localization, fc, &stats);
  out.verdicts =
      validate_all(program, out.candidates, out.localized.inputs, config.run, config.jobs);
  out.report = rank_and_report(program, out.localized.localization, out.candidates, out.verdicts,
                               config.top);
  out.report.settings = config.describe();
  out.report.fixgen = stats;
  out.report.passing_tests = static_cast<int>(out.localized.inputs.passing.size());
  out.report.failing_tests = static_cast<int>(out.localized.inputs.failing.size());
  for (const std::string& w : out.localized.inputs.warnings) out.report.diagnostics.push_back(w);
  return out;
}

}  // namespace confix
