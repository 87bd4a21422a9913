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

#ifndef NND_ADAPTERS_H_
#define NND_ADAPTERS_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nnd/compile.h"
#include "nnd/io.h"

namespace nnd::adapters {

// One input object and where it came from ("file:line" or "file[index]").
struct SourceRow {
  Json value;
  std::string source;
};

// Reads JSON Lines, or a single top-level JSON array of objects.
std::vector<SourceRow> ReadRows(std::istream& in, const std::string& name);
std::vector<SourceRow> ReadRowsFile(const std::filesystem::path& path);

// Quiz Design rows:
//   {"context_id", "context", "model", "question_id", "question", "label"}
// label is one of "No Error", "Disfluent", "Off Target", "Wrong Context".
AnnotationSet AdaptQuizDesign(const std::vector<SourceRow>& rows);
QualityMapping QuizDesignMapping();

// Consolidation of fine-grained source tags into category groups.
class CategoryMap {
 public:
  CategoryMap() = default;
  // Throws nnd::Error if a group name is empty.
  explicit CategoryMap(std::map<std::string, std::string> tag_to_group);

  // Throws nnd::Error if the tag is missing.
  const std::string& GroupOf(const std::string& tag) const;
  std::vector<std::string> groups() const;
  const std::map<std::string, std::string>& entries() const { return map_; }

 private:
  std::map<std::string, std::string> map_;
};

// {"tag": "group", ...}, optionally wrapped as {"category_map": {...}}.
CategoryMap ParseCategoryMap(const Json& value);
Json CategoryMapToJson(const CategoryMap& map);
// Best-effort consolidation of the 20 Challenge 300 tags into five groups.
CategoryMap DefaultChallenge300CategoryMap();

// Challenge 300 rows:
//   {"question_id", "question", "category", "model", "answer", "credit"}
// credit 1 is high quality; credit 0 is low quality with the question's group
// as category. Partially correct (0.5) answers are kept but never paired.
AnnotationSet AdaptChallenge300(const std::vector<SourceRow>& rows,
                                const CategoryMap& category_map);

// SummEval aligned annotations, one summary per row:
//   {"id", "model_id", "decoded", "text",
//    "expert_annotations": [{"coherence", "consistency", "fluency",
//                            "relevance"}, ...]}
// Produces one set per aspect (Coherence, Consistency, Fluency, Relevance).
std::vector<AnnotationSet> AdaptSummEval(const std::vector<SourceRow>& rows);

// True when strictly more than half of the ratings are 5. Throws on ratings
// outside 1..5 or an empty list.
bool SummEvalHighQuality(std::span<const double> ratings);

// FRANK rows: {"hash", "article", "model_name", "summary", "label"}. label is
// "No Error", one of the three groups, or a fine-grained FRANK tag (RelE,
// EntE, CircE, CorefE, LinkE, OutE, GramE, NoE). Rows labeled "Other" or
// "OtherE" are dropped. An optional "split" field other than "test" drops the
// row.
AnnotationSet AdaptFrank(const std::vector<SourceRow>& rows);
// Group of a FRANK label, "" for the dropped "Other" category; throws on
// unknown labels.
std::string FrankGroup(const std::string& label);

// Derives a label from raw_scores for records that carry no label.
struct ScoreRule {
  enum class Kind {
    // high_label when strictly more than half of the scores equal `value`.
    kMajority,
    // Exact lookup of a single score in `labels`.
    kLookup,
  };
  Kind kind = Kind::kMajority;
  double value = 0.0;
  std::string high_label;
  std::string low_label;
  std::vector<std::pair<double, std::string>> labels;
};

struct MappingConfig {
  QualityMapping mapping;
  std::optional<ScoreRule> score_rule;
};

// {"taxonomy": [...], "tiers": {label: int}, "categories": {label: str},
//  "comparability": "all" | [[a, b], ...], "score_rule": {...}?}
MappingConfig ParseMappingConfig(const Json& value);
Json MappingToJson(const QualityMapping& mapping);

// Generic rows: {"context_id", "context_text", "candidate_id",
// "candidate_text", "model_id", "label" | "raw_scores", "attribute"?}.
// Rows are split into one set per attribute.
std::vector<AnnotationSet> AdaptGeneric(const std::vector<SourceRow>& rows,
                                        const MappingConfig& config);

}  // namespace nnd::adapters

#endif  // NND_ADAPTERS_H_
