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

#ifndef NND_SCORE_CHECK_H_
#define NND_SCORE_CHECK_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nnd/io.h"
#include "nnd/likelihood.h"
#include "nnd/types.h"

namespace nnd {

struct ModelCoverage {
  std::string model_id;
  std::int64_t n_tests = 0;
  // Tests with both sides scored.
  std::int64_t n_covered = 0;
  std::vector<std::string> missing_test_ids;

  double coverage() const {
    return n_tests == 0 ? 0.0 : static_cast<double>(n_covered) / n_tests;
  }
};

struct ScoreCheckReport {
  std::vector<ModelCoverage> models;
  // Hard violations: conflicting duplicates, non-finite or positive
  // log-probabilities, token_count mismatches, empty candidates.
  std::vector<std::string> violations;
  // Orphan scores (unknown test_id) and exact duplicates.
  std::vector<std::string> warnings;
  std::int64_t n_orphans = 0;
  std::int64_t n_duplicates = 0;

  bool ok() const { return violations.empty(); }
};

// Log-probabilities above this are treated as positive, not noise.
inline constexpr double kLogprobSlack = 1e-6;

ScoreCheckReport CheckScores(const std::vector<NndTest>& suite,
                             const std::vector<ScoreFile>& files);

std::string FormatScoreCheck(const ScoreCheckReport& report);

// Index of usable scores per model. Throws nnd::Error (validation) if the files
// have hard violations.
std::map<std::string, ScoreIndex> IndexScores(
    const std::vector<NndTest>& suite, const std::vector<ScoreFile>& files);

}  // namespace nnd

#endif  // NND_SCORE_CHECK_H_
