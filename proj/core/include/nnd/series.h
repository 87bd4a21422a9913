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

#ifndef NND_SERIES_H_
#define NND_SERIES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nnd/aggregate.h"
#include "nnd/io.h"
#include "nnd/types.h"

namespace nnd {

struct SeriesPoint {
  std::int64_t step = 0;
  SuiteResult result;
};

struct Series {
  // Per model, points sorted by strictly increasing step.
  std::map<std::string, std::vector<SeriesPoint>> per_model;
  std::vector<std::string> warnings;
};

// Files without a step header are skipped with a warning. Throws nnd::Error
// (validation) when two files carry the same step.
Series BuildSeries(const std::vector<NndTest>& suite,
                   const std::vector<ScoreFile>& files,
                   const std::optional<BootstrapOptions>& bootstrap,
                   std::size_t threads = 1);

}  // namespace nnd

#endif  // NND_SERIES_H_
