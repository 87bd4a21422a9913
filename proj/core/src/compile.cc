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

#include "nnd/compile.h"

#include <algorithm>
#include <utility>

#include "nnd/error.h"
#include "nnd/test_id.h"

namespace nnd {
namespace {

std::string Describe(const AnnotationRecord& record) {
  std::string out = "'" + record.candidate_id + "'";
  if (!record.source.empty()) out += " (" + record.source + ")";
  return out;
}

}  // namespace

void ValidateRecords(const std::vector<AnnotationRecord>& records,
                     const QualityMapping& mapping,
                     const NormalizationConfig& norm) {
  for (const auto& record : records) {
    if (record.context_id.empty()) {
      throw InputError(record.source + ": empty context_id");
    }
    if (record.candidate_id.empty()) {
      throw InputError(record.source + ": empty candidate_id");
    }
    if (NormalizeStored(record.candidate_text, norm).empty()) {
      throw InputError(record.source + ": candidate " +
                       Describe(record) + " has empty text");
    }
    AssignQuality(record, mapping);
  }
}

std::map<std::string, std::vector<AnnotationRecord>> GroupByContext(
    const std::vector<AnnotationRecord>& records) {
  std::map<std::string, std::vector<AnnotationRecord>> groups;
  std::map<std::pair<std::string, std::string>, const AnnotationRecord*> seen;
  for (const auto& record : records) {
    auto [it, inserted] =
        seen.emplace(std::pair(record.context_id, record.candidate_id), &record);
    if (!inserted) {
      throw InputError("duplicate candidate in context '" + record.context_id +
                       "': " + Describe(*it->second) + " and " +
                       Describe(record));
    }
    groups[record.context_id].push_back(record);
  }
  return groups;
}

std::vector<NndTest> GeneratePairs(const std::vector<AnnotationRecord>& group,
                                   const QualityMapping& mapping,
                                   const NormalizationConfig& norm) {
  std::vector<NndTest> tests;
  if (group.empty()) return tests;
  const std::string& context_id = group.front().context_id;

  struct Prepared {
    const AnnotationRecord* record;
    QualityAssignment quality;
    std::string stored;
    std::string key;
  };
  std::vector<Prepared> prepared;
  prepared.reserve(group.size());
  for (const auto& record : group) {
    if (record.context_id != context_id) {
      throw InputError("group mixes contexts '" + context_id + "' and '" +
                       record.context_id + "'");
    }
    prepared.push_back({&record, AssignQuality(record, mapping),
                        NormalizeStored(record.candidate_text, norm),
                        DedupKey(record.candidate_text, norm)});
  }

  for (const auto& high : prepared) {
    for (const auto& low : prepared) {
      if (high.quality.tier <= low.quality.tier) continue;
      if (!mapping.Comparable(high.record->label, low.record->label)) continue;
      if (high.key == low.key) continue;
      NndTest test;
      test.context_id = context_id;
      test.context_text = high.record->context_text;
      test.high_candidate = {high.record->candidate_id, high.stored,
                             high.record->model_id};
      test.low_candidate = {low.record->candidate_id, low.stored,
                            low.record->model_id};
      test.error_category = *low.quality.category;
      test.attribute = low.record->attribute;
      test.test_id = MakeTestId(context_id, test.high_candidate.candidate_id,
                                test.low_candidate.candidate_id,
                                test.attribute);
      tests.push_back(std::move(test));
    }
  }
  std::sort(tests.begin(), tests.end(),
            [](const NndTest& a, const NndTest& b) {
              return a.test_id < b.test_id;
            });
  return tests;
}

std::vector<NndTest> CompileSuite(const std::vector<AnnotationRecord>& records,
                                  const QualityMapping& mapping,
                                  const NormalizationConfig& norm) {
  ValidateRecords(records, mapping, norm);
  std::vector<NndTest> suite;
  for (const auto& [context_id, group] : GroupByContext(records)) {
    auto tests = GeneratePairs(group, mapping, norm);
    suite.insert(suite.end(), std::make_move_iterator(tests.begin()),
                 std::make_move_iterator(tests.end()));
  }
  std::sort(suite.begin(), suite.end(),
            [](const NndTest& a, const NndTest& b) {
              return a.test_id < b.test_id;
            });
  return suite;
}

std::vector<NndTest> CompileSets(const std::vector<AnnotationSet>& sets,
                                 const NormalizationConfig& norm) {
  std::vector<NndTest> suite;
  for (const auto& set : sets) {
    auto tests = CompileSuite(set.records, set.mapping, norm);
    suite.insert(suite.end(), std::make_move_iterator(tests.begin()),
                 std::make_move_iterator(tests.end()));
  }
  std::sort(suite.begin(), suite.end(),
            [](const NndTest& a, const NndTest& b) {
              return a.test_id < b.test_id;
            });
  for (std::size_t i = 1; i < suite.size(); ++i) {
    if (suite[i].test_id == suite[i - 1].test_id) {
      throw InputError("test id collision '" + suite[i].test_id +
                       "' across annotation sets");
    }
  }
  return suite;
}

}  // namespace nnd
