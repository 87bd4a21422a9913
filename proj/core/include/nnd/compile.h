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

#ifndef NND_COMPILE_H_
#define NND_COMPILE_H_

#include <map>
#include <string>
#include <vector>

#include "nnd/normalize.h"
#include "nnd/quality_mapping.h"
#include "nnd/types.h"

namespace nnd {

// Records plus the mapping that governs them. Adapters that produce several
// independent streams (one per SummEval aspect, say) return several sets.
struct AnnotationSet {
  std::string name;
  std::vector<AnnotationRecord> records;
  QualityMapping mapping;
};

// Checks record invariants (non-empty ids and text, label in taxonomy).
void ValidateRecords(const std::vector<AnnotationRecord>& records,
                     const QualityMapping& mapping,
                     const NormalizationConfig& norm);

// Partitions records by context_id. Throws on a duplicate
// (context_id, candidate_id) pair.
std::map<std::string, std::vector<AnnotationRecord>> GroupByContext(
    const std::vector<AnnotationRecord>& records);

// All (higher, lower) pairs in one context group whose labels are eligible
// and whose dedup keys differ, sorted by test_id.
std::vector<NndTest> GeneratePairs(const std::vector<AnnotationRecord>& group,
                                   const QualityMapping& mapping,
                                   const NormalizationConfig& norm);

std::vector<NndTest> CompileSuite(const std::vector<AnnotationRecord>& records,
                                  const QualityMapping& mapping,
                                  const NormalizationConfig& norm);

// Compiles each set and merges the results, sorted by test_id.
std::vector<NndTest> CompileSets(const std::vector<AnnotationSet>& sets,
                                 const NormalizationConfig& norm);

}  // namespace nnd

#endif  // NND_COMPILE_H_
