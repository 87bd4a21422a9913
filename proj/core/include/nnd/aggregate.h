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

#ifndef NND_AGGREGATE_H_
#define NND_AGGREGATE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "nnd/types.h"

namespace nnd {

struct BootstrapOptions {
  int n_resamples = 1000;
  std::uint64_t seed = 0;
};

// Overall and per-category / per-attribute pass rates. With bootstrap options,
// also percentile-bootstrap 95% intervals; each key is resampled within its
// own tests. Outcomes are ordered by test_id first, so the result does not
// depend on input order. Throws on an empty list or mixed model ids.
SuiteResult Aggregate(const std::vector<TestOutcome>& outcomes,
                      const std::optional<BootstrapOptions>& bootstrap =
                          std::nullopt,
                      std::int64_t n_unscored = 0);

// 2.5th and 97.5th percentiles of the resampled pass rate of `passed`.
Interval BootstrapPassRate(const std::vector<bool>& passed, int n_resamples,
                           std::uint64_t seed);

}  // namespace nnd

#endif  // NND_AGGREGATE_H_
