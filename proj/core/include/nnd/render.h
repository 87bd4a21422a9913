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

#ifndef NND_RENDER_H_
#define NND_RENDER_H_

#include <string>
#include <vector>

#include "nnd/series.h"
#include "nnd/stats.h"
#include "nnd/types.h"

namespace nnd {

// Percentage with one decimal, e.g. 0.7291 -> "72.9".
std::string FormatPercent(double rate);

// One row per model; overall then categories (and attributes) as columns.
std::string RenderTable(const std::vector<SuiteResult>& results);
std::string RenderCsv(const std::vector<SuiteResult>& results);
// Grouped bar chart, one group per column of the table.
std::string RenderBarSvg(const std::vector<SuiteResult>& results);

std::string RenderSeriesCsv(const Series& series);
std::string RenderSeriesSvg(const Series& series);

std::string RenderVerification(const VerificationReport& report);

}  // namespace nnd

#endif  // NND_RENDER_H_
