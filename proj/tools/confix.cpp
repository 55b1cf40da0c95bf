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

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "confix/session/session.hpp"
#include "confix/syntax/parser.hpp"
#include "confix/syntax/printer.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitFixed = 0;
constexpr int kExitError = 1;
constexpr int kExitNoFix = 3;

struct Flags {
  std::string program;
  std::string config;
  bool no_config = false;
  std::string fault;
  std::optional<std::uint64_t> seed;
  std::optional<int> tests;
  std::optional<int> max_steps;
  std::optional<std::string> targets;
  std::optional<std::string> alpha;
  std::optional<std::string> beta;
  std::optional<std::string> gamma;
  std::optional<int> max_components;
  std::optional<int> top;
  std::optional<int> jobs;
  std::optional<int> step_budget;
  std::optional<std::string> suite;
  std::optional<std::string> out;
};

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

confix::SessionConfig make_config(const Flags& flags) {
  confix::SessionConfig config;
  config.program_path = flags.program;
  std::string conf = flags.config;
  if (conf.empty() && !flags.no_config) {
    fs::path sibling = fs::path(flags.program).replace_extension(".conf");
    if (fs::exists(sibling)) conf = sibling.string();
  }
  if (!conf.empty()) confix::apply_config(config, confix::read_config(conf));

  confix::ConfigFile overrides;
  auto set = [&](const char* key, const auto& value) {
    if (!value) return;
    std::ostringstream s;
    s << *value;
    overrides.entries.emplace_back(key, s.str());
  };
  set("seed", flags.seed);
  set("tests", flags.tests);
  set("max_steps", flags.max_steps);
  set("targets", flags.targets);
  set("alpha", flags.alpha);
  set("beta", flags.beta);
  set("gamma", flags.gamma);
  set("max_components", flags.max_components);
  set("top", flags.top);
  set("jobs", flags.jobs);
  set("step_budget", flags.step_budget);
  confix::apply_config(config, overrides);
  if (flags.suite) config.suite_path = *flags.suite;
  if (flags.out) config.out_dir = *flags.out;
  if (std::string problem = config.validate(); !problem.empty()) {
    throw std::runtime_error(problem);
  }
  return config;
}

confix::FaultKey resolve_fault(const confix::Program& program, const std::string& text) {
  auto key = confix::parse_fault_key(program, text);
  if (!key) throw std::runtime_error("unknown fault key '" + text + "'");
  return *key;
}

void ensure_dir(const std::string& dir) { fs::create_directories(dir); }

int run_test_command(const Flags& flags) {
  const confix::SessionConfig config = make_config(flags);
  const confix::Program program = confix::load_program(config.program_path);
  const confix::TestSuite suite = confix::obtain_suite(program, config);
  ensure_dir(config.out_dir);
  const fs::path path = fs::path(config.out_dir) / (stem(config.program_path) + ".suite");
  std::ofstream out(path);
  confix::write_suite(out, program, suite);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  confix::write_test_summary(std::cout, program, suite);
  std::cout << "suite: " << path.string() << "\n";
  return kExitFixed;
}

int run_localize_command(const Flags& flags) {
  const confix::SessionConfig config = make_config(flags);
  const confix::Program program = confix::load_program(config.program_path);
  const confix::TestSuite suite = confix::obtain_suite(program, config);
  const confix::FaultKey fault = resolve_fault(program, flags.fault);
  const confix::LocalizeOutcome outcome =
      confix::run_localization(program, suite, fault, config);
  for (const std::string& w : outcome.inputs.warnings) std::cerr << "warning: " << w << "\n";
  ensure_dir(config.out_dir);
  const fs::path path = fs::path(config.out_dir) / (stem(config.program_path) + ".components.tsv");
  std::ofstream out(path);
  confix::write_components_tsv(out, outcome.localization);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  confix::write_components_tsv(std::cout, outcome.localization, config.top);
  std::cout << "# " << outcome.localization.ranked.size() << " components, all in "
            << path.string() << "\n";
  return kExitFixed;
}

int run_fix_command(const Flags& flags) {
  const confix::SessionConfig config = make_config(flags);
  const confix::Program program = confix::load_program(config.program_path);
  const confix::TestSuite suite = confix::obtain_suite(program, config);
  const confix::FaultKey fault = resolve_fault(program, flags.fault);
  const confix::FixOutcome outcome = confix::run_fix(program, suite, fault, config);

  ensure_dir(config.out_dir);
  const std::string base = stem(config.program_path);
  const fs::path dir(config.out_dir);
  {
    std::ofstream text(dir / (base + ".report.txt"));
    confix::write_report_text(text, outcome.report);
    std::ofstream json(dir / (base + ".report.jsonl"));
    confix::write_report_jsonl(json, outcome.report);
    if (!text || !json) throw std::runtime_error("cannot write reports to " + config.out_dir);
  }
  for (const confix::ReportedFix& fix : outcome.report.fixes) {
    char name[64];
    std::snprintf(name, sizeof name, "%s.fix%02d.cdl", base.c_str(), fix.rank);
    std::ofstream out(dir / name);
    out << confix::print(confix::apply_candidate(program, *fix.candidate));
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  }
  confix::write_report_text(std::cout, outcome.report);
  return outcome.report.fixes.empty() ? kExitNoFix : kExitFixed;
}

void add_common(CLI::App& cmd, Flags& flags) {
  cmd.add_option("program", flags.program, "CDL source file")->required()->check(CLI::ExistingFile);
  cmd.add_option("--config", flags.config, "Corpus config (default: <program>.conf if present)")
      ->check(CLI::ExistingFile);
  cmd.add_flag("--no-config", flags.no_config, "Ignore <program>.conf");
  cmd.add_option("--seed", flags.seed, "Generator seed");
  cmd.add_option("--tests", flags.tests, "Number of generated tests");
  cmd.add_option("--max-steps", flags.max_steps, "Driver steps per generated test");
  cmd.add_option("--targets", flags.targets, "Comma-separated classes to exercise");
  cmd.add_option("--suite", flags.suite, "Use this suite file instead of generating")
      ->check(CLI::ExistingFile);
  cmd.add_option("--jobs", flags.jobs, "Worker threads");
  cmd.add_option("--step-budget", flags.step_budget, "Interpreter steps per test");
  cmd.add_option("--out", flags.out, "Output directory");
}

void add_scoring(CLI::App& cmd, Flags& flags) {
  cmd.add_option("--fault", flags.fault, "Fault key CLASS.routine:loc:feature.tag")->required();
  cmd.add_option("--alpha", flags.alpha, "Decay of the dynamic score, in (0, 1)");
  cmd.add_option("--beta", flags.beta, "Weight of passing tests, in (0, 1)");
  cmd.add_option("--gamma", flags.gamma, "Base of the dynamic score, >= 0");
  cmd.add_option("--top", flags.top, "Rows or fixes to print");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contract-based automatic fixing for CDL programs"};
  app.require_subcommand(1);
  Flags flags;
  CLI::App* test = app.add_subcommand("test", "Generate and classify a random test suite");
  add_common(*test, flags);
  CLI::App* loc = app.add_subcommand("localize", "Rank fix components for a fault");
  add_common(*loc, flags);
  add_scoring(*loc, flags);
  CLI::App* fix = app.add_subcommand("fix", "Generate, validate and rank fixes for a fault");
  add_common(*fix, flags);
  add_scoring(*fix, flags);
  fix->add_option("--max-components", flags.max_components, "Components used for fixes");

  CLI11_PARSE(app, argc, argv);
  try {
    if (test->parsed()) return run_test_command(flags);
    if (loc->parsed()) return run_localize_command(flags);
    return run_fix_command(flags);
  } catch (const confix::CdlError& e) {
    std::cerr << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitError;
}
