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

#include "confix/validation/validation.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "common/parallel.hpp"
#include "confix/syntax/printer.hpp"

namespace confix {

ValidationVerdict validate_candidate(const Program& program, const FixCandidate& candidate,
                                     const FaultInputs& inputs, const RunOptions& options) {
  const Program patched = apply_candidate(program, candidate);
  RunOptions quiet = options;
  quiet.record_steps = false;
  quiet.snapshots = false;
  ValidationVerdict v;
  v.candidate = candidate.id;
  for (const TestCase& t : inputs.failing) {
    const Verdict r = run_test(patched, t, quiet).verdict;
    v.passed_failing += r == Verdict::kPass;
    v.outcomes.push_back(TestOutcome{t.id, true, r});
  }
  for (const TestCase& t : inputs.passing) {
    const Verdict r = run_test(patched, t, quiet).verdict;
    v.passed_passing += r == Verdict::kPass;
    v.outcomes.push_back(TestOutcome{t.id, false, r});
  }
  v.valid = v.passed_failing == static_cast<int>(inputs.failing.size()) &&
            v.passed_passing == static_cast<int>(inputs.passing.size());
  return v;
}

std::vector<ValidationVerdict> validate_all(const Program& program,
                                            const std::vector<FixCandidate>& candidates,
                                            const FaultInputs& inputs, const RunOptions& options,
                                            int jobs) {
  std::vector<ValidationVerdict> out(candidates.size());
  detail::parallel_for(candidates.size(), jobs, [&](std::size_t i) {
    out[i] = validate_candidate(program, candidates[i], inputs, options);
  });
  return out;
}

FixReport rank_and_report(const Program& program, const Localization& localization,
                          const std::vector<FixCandidate>& candidates,
                          const std::vector<ValidationVerdict>& verdicts, int top) {
  FixReport report;
  report.fault = format_fault_key(program, localization.fault.key);
  report.clause = localization.fault.clause ? print(localization.fault.clause) : "";
  report.components_observed = localization.observed;
  report.components_ranked = static_cast<int>(localization.ranked.size());
  report.candidates = static_cast<int>(candidates.size());

  std::vector<const FixCandidate*> valid;
  for (std::size_t i = 0; i < candidates.size() && i < verdicts.size(); ++i) {
    if (verdicts[i].valid) valid.push_back(&candidates[i]);
  }
  report.valid = static_cast<int>(valid.size());
  std::stable_sort(valid.begin(), valid.end(), [](const FixCandidate* a, const FixCandidate* b) {
    if (a->component.scores.fixme != b->component.scores.fixme) {
      return a->component.scores.fixme > b->component.scores.fixme;
    }
    return a->id < b->id;
  });
  if (static_cast<int>(valid.size()) > top) {
    report.diagnostics.push_back("reported the top " + std::to_string(top) + " of " +
                                 std::to_string(valid.size()) + " valid fixes");
    valid.resize(static_cast<std::size_t>(top));
  }
  const RoutineRef routine = localization.fault.key.location.routine;
  const std::string name = program.routine_name(routine);
  const std::string original = print(program.routine(routine));
  for (const FixCandidate* c : valid) {
    ReportedFix f;
    f.rank = static_cast<int>(report.fixes.size()) + 1;
    f.candidate = c;
    f.patch = unified_diff(original, print(c->routine), name,
                           name + " (fix " + std::to_string(f.rank) + ")");
    report.fixes.push_back(std::move(f));
  }
  if (report.fixes.empty()) report.diagnostics.push_back("no valid fix found");
  return report;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

struct Edit {
  char op;  // ' ', '-', '+'
  std::string line;
  int a;  // 1-based line in `before` (or position for inserts)
  int b;
};

std::vector<Edit> diff_lines(const std::vector<std::string>& x, const std::vector<std::string>& y) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      lcs[i][j] = x[i] == y[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  std::vector<Edit> edits;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && x[i] == y[j]) {
      edits.push_back({' ', x[i], static_cast<int>(i + 1), static_cast<int>(j + 1)});
      ++i;
      ++j;
    } else if (j < m && (i == n || lcs[i][j + 1] >= lcs[i + 1][j])) {
      edits.push_back({'+', y[j], static_cast<int>(i + 1), static_cast<int>(j + 1)});
      ++j;
    } else {
      edits.push_back({'-', x[i], static_cast<int>(i + 1), static_cast<int>(j + 1)});
      ++i;
    }
  }
  return edits;
}

std::string range(int start, int count) {
  if (count == 0) return std::to_string(start - 1) + ",0";
  if (count == 1) return std::to_string(start);
  return std::to_string(start) + "," + std::to_string(count);
}

}  // namespace

std::string unified_diff(const std::string& before, const std::string& after,
                         const std::string& before_name, const std::string& after_name) {
  if (before == after) return {};
  const auto edits = diff_lines(split_lines(before), split_lines(after));
  constexpr std::size_t kContext = 3;
  std::ostringstream out;
  out << "--- " << before_name << "\n+++ " << after_name << "\n";
  std::size_t k = 0;
  while (k < edits.size()) {
    while (k < edits.size() && edits[k].op == ' ') ++k;
    if (k == edits.size()) break;
    std::size_t start = k >= kContext ? k - kContext : 0;
    std::size_t end = k;
    // Extend the hunk while changes are within 2 * context of each other.
    while (end < edits.size()) {
      if (edits[end].op != ' ') {
        ++end;
        continue;
      }
      std::size_t run = end;
      while (run < edits.size() && edits[run].op == ' ') ++run;
      if (run == edits.size() || run - end > 2 * kContext) {
        end = std::min(edits.size(), end + kContext);
        break;
      }
      end = run;
    }
    int a_count = 0;
    int b_count = 0;
    for (std::size_t e = start; e < end; ++e) {
      a_count += edits[e].op != '+';
      b_count += edits[e].op != '-';
    }
    out << "@@ -" << range(edits[start].a, a_count) << " +" << range(edits[start].b, b_count)
        << " @@\n";
    for (std::size_t e = start; e < end; ++e) out << edits[e].op << edits[e].line << "\n";
    k = end;
  }
  return out.str();
}

void write_report_text(std::ostream& out, const FixReport& report) {
  out << "fault: " << report.fault << "\n";
  out << "clause: " << report.clause << "\n";
  for (const auto& [key, value] : report.settings) out << "setting " << key << " = " << value << "\n";
  out << "tests: " << report.passing_tests << " passing, " << report.failing_tests
      << " failing\n";
  out << "components: " << report.components_observed << " observed, "
      << report.components_ranked << " with failing evidence, " << report.fixgen.components
      << " used\n";
  out << "candidates: " << report.fixgen.generated << " generated, " << report.fixgen.rejected
      << " ill-typed, " << report.fixgen.duplicates << " duplicate, " << report.candidates
      << " validated, " << report.valid << " valid\n";
  out << "note: schema a takes expression modifications only\n";
  for (const std::string& d : report.diagnostics) out << "note: " << d << "\n";
  for (const ReportedFix& f : report.fixes) {
    const FixCandidate& c = *f.candidate;
    out << "\nfix " << f.rank << " (candidate " << c.id << ")\n";
    out << "  score: " << format_decimal(c.component.scores.fixme) << "\n";
    out << "  component: #" << c.component_rank << " location " << c.component.location << ", "
        << c.predicate << " = " << (c.component.value ? "True" : "False") << "\n";
    out << "  schema: " << schema_letter(c.schema) << "\n";
    out << "  fail: " << print(c.fail) << "\n";
    if (c.action) out << "  snippet: " << print(c.action->snippet) << "\n";
    std::istringstream patch(f.patch);
    std::string line;
    while (std::getline(patch, line)) out << "  " << line << "\n";
  }
}

void write_report_jsonl(std::ostream& out, const FixReport& report) {
  for (const ReportedFix& f : report.fixes) {
    const FixCandidate& c = *f.candidate;
    nlohmann::json j;
    j["fault"] = report.fault;
    j["rank"] = f.rank;
    j["candidate"] = c.id;
    j["fixme"] = format_decimal(c.component.scores.fixme);
    j["fixme_exact"] = c.component.scores.fixme.str();
    j["schema"] = std::string(1, schema_letter(c.schema));
    j["fail"] = print(c.fail);
    j["snippet"] = c.action ? nlohmann::json(print(c.action->snippet)) : nlohmann::json(nullptr);
    j["component"] = {{"rank", c.component_rank},
                      {"location", c.component.location},
                      {"predicate", c.predicate},
                      {"value", c.component.value}};
    j["patch"] = f.patch;
    out << j.dump() << "\n";
  }
}

}  // namespace confix
