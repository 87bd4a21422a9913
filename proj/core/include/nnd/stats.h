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

#ifndef NND_STATS_H_
#define NND_STATS_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nnd {

// A correlation coefficient, or nothing when it is undefined for the input
// (a constant vector). Never NaN.
struct Correlation {
  std::optional<double> value;

  bool degenerate() const { return !value.has_value(); }
};

// Kendall tau-b. Runs in O(n log n). Throws nnd::Error if the lengths differ
// or n < 2.
Correlation KendallTau(std::span<const double> x, std::span<const double> y);

// Pearson r. Throws nnd::Error if the lengths differ or n < 2.
Correlation Pearson(std::span<const double> x, std::span<const double> y);

// One metric's score and the human ground truth for each model.
class ModelScoreTable {
 public:
  // Throws nnd::Error if the key sets differ or fewer than two models remain.
  ModelScoreTable(std::map<std::string, double> scores,
                  std::map<std::string, double> human);

  // Lexicographic.
  const std::vector<std::string>& models() const { return models_; }
  std::vector<double> metric_values() const;
  std::vector<double> human_values() const;
  double metric(const std::string& model) const { return scores_.at(model); }
  double human(const std::string& model) const { return human_.at(model); }

 private:
  std::vector<std::string> models_;
  std::map<std::string, double> scores_;
  std::map<std::string, double> human_;
};

struct GapVectors {
  std::vector<double> metric;
  std::vector<double> human;
};

// For models sorted lexicographically, entry (i, j) with i < j holds
// value(i) - value(j). Length n(n-1)/2.
GapVectors MakeGapVectors(const ModelScoreTable& table);

struct VerificationReport {
  std::vector<std::string> models;
  std::size_t n_pairs = 0;
  Correlation rank_tau;
  Correlation gap_r;
};

VerificationReport Verify(const ModelScoreTable& table);

// Unweighted mean over the non-degenerate entries of each statistic.
struct MacroAverage {
  Correlation rank_tau;
  Correlation gap_r;
  int n_tau = 0;
  int n_r = 0;
};

MacroAverage Average(const std::vector<VerificationReport>& reports);

}  // namespace nnd

#endif  // NND_STATS_H_
