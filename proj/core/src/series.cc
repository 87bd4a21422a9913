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

#include "nnd/series.h"

#include <algorithm>

#include "nnd/error.h"
#include "nnd/likelihood.h"
#include "nnd/score_check.h"

namespace nnd {

Series BuildSeries(const std::vector<NndTest>& suite,
                   const std::vector<ScoreFile>& files,
                   const std::optional<BootstrapOptions>& bootstrap,
                   std::size_t threads) {
  Series series;
  std::map<std::int64_t, const ScoreFile*> by_step;
  for (const auto& file : files) {
    if (!file.step) {
      series.warnings.push_back(file.name +
                                ": no step header, skipped");
      continue;
    }
    auto [it, inserted] = by_step.emplace(*file.step, &file);
    if (!inserted) {
      throw ValidationError("step " + std::to_string(*file.step) +
                            " appears in both " + it->second->name + " and " +
                            file.name);
    }
  }
  for (const auto& [step, file] : by_step) {
    const auto index = IndexScores(suite, {*file});
    for (const auto& [model, scores] : index) {
      Administration administration = AdministerSuite(suite, scores, threads);
      if (administration.outcomes.empty()) {
        series.warnings.push_back(file->name + ": model '" + model +
                                  "' has no fully scored tests");
        continue;
      }
      series.per_model[model].push_back(
          {step, Aggregate(administration.outcomes, bootstrap,
                           static_cast<std::int64_t>(
                               administration.unscored_test_ids.size()))});
    }
  }
  return series;
}

}  // namespace nnd
