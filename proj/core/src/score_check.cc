// Copyright 2026 The NND Evaluation Authors.
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

#include "nnd/score_check.h"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <tuple>

#include "nnd/error.h"

namespace nnd {
namespace {

struct SeenScore {
  const ScoredCandidate* score;
  std::string where;
};

using ScoreKey = std::tuple<std::string, std::string, Side>;

std::string Describe(const ScoredCandidate& score) {
  return "test " + score.test_id + " side " + std::string(SideName(score.side)) +
         " model '" + score.model_id + "'";
}

std::optional<std::string> Problem(const ScoredCandidate& score) {
  if (score.token_logprobs.empty() || score.token_count <= 0) {
    return "no scored tokens";
  }
  if (static_cast<std::size_t>(score.token_count) !=
      score.token_logprobs.size()) {
    return "token_count " + std::to_string(score.token_count) +
           " does not match " + std::to_string(score.token_logprobs.size()) +
           " log-probabilities";
  }
  for (double logprob : score.token_logprobs) {
    if (!std::isfinite(logprob)) return std::string("non-finite log-probability");
    if (logprob > kLogprobSlack) return std::string("positive log-probability");
  }
  return std::nullopt;
}

bool SameScore(const ScoredCandidate& a, const ScoredCandidate& b) {
  return a.token_count == b.token_count && a.token_logprobs == b.token_logprobs;
}

}  // namespace

ScoreCheckReport CheckScores(const std::vector<NndTest>& suite,
                             const std::vector<ScoreFile>& files) {
  ScoreCheckReport report;
  std::set<std::string> suite_ids;
  for (const auto& test : suite) suite_ids.insert(test.test_id);

  std::map<ScoreKey, SeenScore> seen;
  std::set<std::string> models;
  for (const auto& file : files) {
    for (const auto& line : file.lines) {
      const ScoredCandidate& score = line.score;
      const std::string where = file.name + ":" + std::to_string(line.line);
      if (!suite_ids.contains(score.test_id)) {
        ++report.n_orphans;
        report.warnings.push_back(where + ": orphan score for unknown test " +
                                  score.test_id);
        continue;
      }
      if (auto problem = Problem(score)) {
        report.violations.push_back(where + ": " + Describe(score) + ": " +
                                    *problem);
        continue;
      }
      models.insert(score.model_id);
      ScoreKey key{score.model_id, score.test_id, score.side};
      auto [it, inserted] = seen.emplace(key, SeenScore{&score, where});
      if (inserted) continue;
      if (SameScore(*it->second.score, score)) {
        ++report.n_duplicates;
        report.warnings.push_back(where + ": duplicate of " + it->second.where +
                                  " (" + Describe(score) + ")");
      } else {
        report.violations.push_back(where + ": conflicts with " +
                                    it->second.where + " (" + Describe(score) +
                                    ")");
      }
    }
  }

  for (const auto& model : models) {
    ModelCoverage coverage;
    coverage.model_id = model;
    coverage.n_tests = static_cast<std::int64_t>(suite.size());
    for (const auto& test : suite) {
      if (seen.contains({model, test.test_id, Side::kHigh}) &&
          seen.contains({model, test.test_id, Side::kLow})) {
        ++coverage.n_covered;
      } else {
        coverage.missing_test_ids.push_back(test.test_id);
      }
    }
    report.models.push_back(std::move(coverage));
  }
  return report;
}

std::string FormatScoreCheck(const ScoreCheckReport& report) {
  std::ostringstream out;
  if (report.models.empty()) out << "no valid scores found\n";
  for (const auto& model : report.models) {
    char percent[32];
    std::snprintf(percent, sizeof(percent), "%.1f", 100.0 * model.coverage());
    out << "model " << model.model_id << ": coverage " << percent << "% ("
        << model.n_covered << "/" << model.n_tests << ")\n";
    for (const auto& id : model.missing_test_ids) {
      out << "  missing " << id << "\n";
    }
  }
  out << "orphans: " << report.n_orphans << "\n";
  out << "duplicates: " << report.n_duplicates << "\n";
  out << "violations: " << report.violations.size() << "\n";
  for (const auto& violation : report.violations) {
    out << "  " << violation << "\n";
  }
  for (const auto& warning : report.warnings) {
    out << "warning: " << warning << "\n";
  }
  out << "status: " << (report.ok() ? "OK" : "FAILED") << "\n";
  return out.str();
}

std::map<std::string, ScoreIndex> IndexScores(
    const std::vector<NndTest>& suite, const std::vector<ScoreFile>& files) {
  const ScoreCheckReport report = CheckScores(suite, files);
  if (!report.ok()) {
    std::string message = "score files have " +
                          std::to_string(report.violations.size()) +
                          " violation(s); first: " + report.violations.front();
    throw ValidationError(message);
  }
  std::set<std::string> suite_ids;
  for (const auto& test : suite) suite_ids.insert(test.test_id);
  std::map<std::string, ScoreIndex> index;
  for (const auto& file : files) {
    for (const auto& line : file.lines) {
      if (!suite_ids.contains(line.score.test_id)) continue;
      index[line.score.model_id].emplace(
          std::pair(line.score.test_id, line.score.side), line.score);
    }
  }
  return index;
}

}  // namespace nnd
