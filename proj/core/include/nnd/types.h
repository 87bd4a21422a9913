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

#ifndef NND_TYPES_H_
#define NND_TYPES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nnd {

// One annotated (context, candidate) tuple from a source human evaluation.
struct AnnotationRecord {
  std::string context_id;
  std::string context_text;
  std::string candidate_id;
  std::string candidate_text;
  std::string model_id;
  // Empty when the record only carries raw_scores and no label was derived.
  std::string label;
  std::vector<double> raw_scores;
  std::optional<std::string> attribute;
  // Human-readable origin (e.g. "file.jsonl:12"), used in error messages.
  std::string source;
};

struct CandidateRef {
  std::string candidate_id;
  std::string text;
  std::string model_id;

  friend bool operator==(const CandidateRef&, const CandidateRef&) = default;
};

// A (context, high, low) triplet. The model passes when it assigns the high
// candidate a strictly larger length-normalized log-likelihood.
struct NndTest {
  std::string test_id;
  std::string context_id;
  std::string context_text;
  CandidateRef high_candidate;
  CandidateRef low_candidate;
  std::string error_category;
  std::optional<std::string> attribute;

  friend bool operator==(const NndTest&, const NndTest&) = default;
};

enum class Side { kHigh, kLow };

std::string_view SideName(Side side);
std::optional<Side> ParseSide(std::string_view name);

// Per-token natural-log probabilities for one side of one test.
struct ScoredCandidate {
  std::string test_id;
  Side side = Side::kHigh;
  std::string model_id;
  std::vector<double> token_logprobs;
  std::int64_t token_count = 0;
};

struct TestOutcome {
  std::string test_id;
  std::string model_id;
  double ll_high = 0.0;
  double ll_low = 0.0;
  bool passed = false;
  std::string error_category;
  std::optional<std::string> attribute;
};

struct RateCell {
  std::int64_t n_tests = 0;
  std::int64_t n_passed = 0;
  double pass_rate = 0.0;

  friend bool operator==(const RateCell&, const RateCell&) = default;
};

using Interval = std::pair<double, double>;

struct ConfidenceIntervals {
  Interval overall{0.0, 0.0};
  std::map<std::string, Interval> per_category;
  std::map<std::string, Interval> per_attribute;

  friend bool operator==(const ConfidenceIntervals&,
                         const ConfidenceIntervals&) = default;
};

struct SuiteResult {
  std::string model_id;
  // Scored tests only; unscored tests are counted separately.
  std::int64_t n_tests = 0;
  std::int64_t n_passed = 0;
  std::int64_t n_unscored = 0;
  double overall_pass_rate = 0.0;
  std::map<std::string, RateCell> per_category;
  std::map<std::string, RateCell> per_attribute;
  std::optional<ConfidenceIntervals> ci95;

  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

}  // namespace nnd

#endif  // NND_TYPES_H_
