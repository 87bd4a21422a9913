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

#include "nnd/stats.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

#include "nnd/error.h"

namespace nnd {
namespace {

void CheckLengths(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw InputError("correlation inputs differ in length (" +
                     std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) throw InputError("correlation needs at least 2 values");
}

std::int64_t TiedPairs(std::span<const double> sorted) {
  std::int64_t ties = 0;
  std::int64_t run = 1;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
      ++run;
    } else {
      ties += run * (run - 1) / 2;
      run = 1;
    }
  }
  return ties;
}

// Stable merge sort of `v` that returns the number of inversions (pairs
// strictly out of order).
std::int64_t SortCountingSwaps(std::vector<double>& v,
                               std::vector<double>& scratch, std::size_t lo,
                               std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t swaps = SortCountingSwaps(v, scratch, lo, mid) +
                       SortCountingSwaps(v, scratch, mid, hi);
  std::size_t i = lo;
  std::size_t j = mid;
  std::size_t k = lo;
  while (i < mid && j < hi) {
    if (v[i] <= v[j]) {
      scratch[k++] = v[i++];
    } else {
      swaps += static_cast<std::int64_t>(mid - i);
      scratch[k++] = v[j++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

}  // namespace

Correlation KendallTau(std::span<const double> x, std::span<const double> y) {
  CheckLengths(x, y);
  const std::size_t n = x.size();
  std::vector<std::pair<double, double>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {x[i], y[i]};
  std::sort(pairs.begin(), pairs.end());

  const auto total = static_cast<std::int64_t>(n) *
                     static_cast<std::int64_t>(n - 1) / 2;
  std::vector<double> xs(n);
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = pairs[i].first;
    ys[i] = pairs[i].second;
  }
  const std::int64_t x_ties = TiedPairs(xs);

  std::int64_t joint_ties = 0;
  std::int64_t run = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i < n && pairs[i] == pairs[i - 1]) {
      ++run;
    } else {
      joint_ties += run * (run - 1) / 2;
      run = 1;
    }
  }

  std::vector<double> scratch(n);
  const std::int64_t swaps = SortCountingSwaps(ys, scratch, 0, n);
  const std::int64_t y_ties = TiedPairs(ys);

  const std::int64_t x_pairs = total - x_ties;
  const std::int64_t y_pairs = total - y_ties;
  if (x_pairs == 0 || y_pairs == 0) return {};
  const std::int64_t numerator = total - x_ties - y_ties + joint_ties - 2 * swaps;
  const double tau =
      static_cast<double>(numerator) /
      std::sqrt(static_cast<double>(x_pairs) * static_cast<double>(y_pairs));
  return {std::clamp(tau, -1.0, 1.0)};
}

Correlation Pearson(std::span<const double> x, std::span<const double> y) {
  CheckLengths(x, y);
  // Single-pass co-moment updates.
  double mean_x = 0.0;
  double mean_y = 0.0;
  double m2_x = 0.0;
  double m2_y = 0.0;
  double co = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw InputError("correlation input is not finite");
    }
    const double k = static_cast<double>(i + 1);
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    mean_x += dx / k;
    mean_y += dy / k;
    m2_x += dx * (x[i] - mean_x);
    m2_y += dy * (y[i] - mean_y);
    co += dx * (y[i] - mean_y);
  }
  if (m2_x <= 0.0 || m2_y <= 0.0) return {};
  return {std::clamp(co / std::sqrt(m2_x * m2_y), -1.0, 1.0)};
}

ModelScoreTable::ModelScoreTable(std::map<std::string, double> scores,
                                 std::map<std::string, double> human)
    : scores_(std::move(scores)), human_(std::move(human)) {
  std::vector<std::string> only_metric;
  std::vector<std::string> only_human;
  for (const auto& [model, value] : scores_) {
    if (!human_.contains(model)) only_metric.push_back(model);
  }
  for (const auto& [model, value] : human_) {
    if (!scores_.contains(model)) only_human.push_back(model);
  }
  if (!only_metric.empty() || !only_human.empty()) {
    std::string message = "model sets differ;";
    auto list = [&](const char* what, const std::vector<std::string>& names) {
      if (names.empty()) return;
      message += std::string(" ") + what + ":";
      for (const auto& name : names) message += " " + name;
      message += ";";
    };
    list("only in metric scores", only_metric);
    list("only in human scores", only_human);
    message.pop_back();
    throw ValidationError(message);
  }
  if (scores_.size() < 2) {
    throw ValidationError("verification needs at least 2 models");
  }
  for (const auto& [model, value] : scores_) models_.push_back(model);
}

std::vector<double> ModelScoreTable::metric_values() const {
  std::vector<double> values;
  for (const auto& model : models_) values.push_back(scores_.at(model));
  return values;
}

std::vector<double> ModelScoreTable::human_values() const {
  std::vector<double> values;
  for (const auto& model : models_) values.push_back(human_.at(model));
  return values;
}

GapVectors MakeGapVectors(const ModelScoreTable& table) {
  const auto metric = table.metric_values();
  const auto human = table.human_values();
  GapVectors gaps;
  for (std::size_t i = 0; i < metric.size(); ++i) {
    for (std::size_t j = i + 1; j < metric.size(); ++j) {
      gaps.metric.push_back(metric[i] - metric[j]);
      gaps.human.push_back(human[i] - human[j]);
    }
  }
  return gaps;
}

VerificationReport Verify(const ModelScoreTable& table) {
  VerificationReport report;
  report.models = table.models();
  const auto metric = table.metric_values();
  const auto human = table.human_values();
  report.rank_tau = KendallTau(metric, human);
  const GapVectors gaps = MakeGapVectors(table);
  report.n_pairs = gaps.metric.size();
  if (gaps.metric.size() >= 2) {
    report.gap_r = Pearson(gaps.metric, gaps.human);
  }
  return report;
}

MacroAverage Average(const std::vector<VerificationReport>& reports) {
  MacroAverage average;
  double tau_sum = 0.0;
  double r_sum = 0.0;
  for (const auto& report : reports) {
    if (report.rank_tau.value) {
      tau_sum += *report.rank_tau.value;
      ++average.n_tau;
    }
    if (report.gap_r.value) {
      r_sum += *report.gap_r.value;
      ++average.n_r;
    }
  }
  if (average.n_tau > 0) average.rank_tau = {tau_sum / average.n_tau};
  if (average.n_r > 0) average.gap_r = {r_sum / average.n_r};
  return average;
}

}  // namespace nnd
