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

#include "nnd/adapters.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "nnd/error.h"

namespace nnd::adapters {
namespace {

const Json& Require(const SourceRow& row, const char* key) {
  if (!row.value.is_object()) {
    throw InputError(row.source + ": expected a JSON object");
  }
  auto it = row.value.find(key);
  if (it == row.value.end() || it->is_null()) {
    throw InputError(row.source + ": missing field '" + key + "'");
  }
  return *it;
}

std::string RequireString(const SourceRow& row, const char* key) {
  const Json& value = Require(row, key);
  if (value.is_string()) return value.get<std::string>();
  // Numeric ids are common in exported spreadsheets.
  if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
  throw InputError(row.source + ": field '" + key + "' must be a string");
}

double RequireNumber(const SourceRow& row, const char* key) {
  const Json& value = Require(row, key);
  if (!value.is_number()) {
    throw InputError(row.source + ": field '" + key + "' must be a number");
  }
  return value.get<double>();
}

std::optional<std::string> OptionalString(const SourceRow& row,
                                          const char* key) {
  auto it = row.value.find(key);
  if (it == row.value.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw InputError(row.source + ": field '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

constexpr const char* kNoError = "No Error";

}  // namespace

std::vector<SourceRow> ReadRows(std::istream& in, const std::string& name) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<SourceRow> rows;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return rows;
  if (text[first] == '[') {
    Json array = ParseJson(text, name);
    for (std::size_t i = 0; i < array.size(); ++i) {
      rows.push_back({std::move(array[i]), name + "[" + std::to_string(i) + "]"});
    }
    return rows;
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    const std::string where = name + ":" + std::to_string(number);
    rows.push_back({ParseJson(line, where), where});
  }
  return rows;
}

std::vector<SourceRow> ReadRowsFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return ReadRows(in, path.string());
}

// --- Quiz Design -----------------------------------------------------------

QualityMapping QuizDesignMapping() {
  return QualityMapping(
      {{kNoError, 1}, {"Disfluent", 0}, {"Off Target", 0}, {"Wrong Context", 0}},
      {{"Disfluent", "Disfluent"},
       {"Off Target", "Off Target"},
       {"Wrong Context", "Wrong Context"}});
}

AnnotationSet AdaptQuizDesign(const std::vector<SourceRow>& rows) {
  AnnotationSet set{"quiz_design", {}, QuizDesignMapping()};
  for (const auto& row : rows) {
    AnnotationRecord record;
    record.context_id = RequireString(row, "context_id");
    record.context_text = RequireString(row, "context");
    record.candidate_id = RequireString(row, "question_id");
    record.candidate_text = RequireString(row, "question");
    record.model_id = RequireString(row, "model");
    record.label = RequireString(row, "label");
    record.source = row.source;
    if (!set.mapping.Contains(record.label)) {
      throw InputError(row.source + ": unknown Quiz Design label '" +
                       record.label + "'");
    }
    set.records.push_back(std::move(record));
  }
  return set;
}

// --- Challenge 300 ---------------------------------------------------------

CategoryMap::CategoryMap(std::map<std::string, std::string> tag_to_group)
    : map_(std::move(tag_to_group)) {
  for (const auto& [tag, group] : map_) {
    if (group.empty()) {
      throw InputError("category map sends '" + tag + "' to an empty group");
    }
  }
}

const std::string& CategoryMap::GroupOf(const std::string& tag) const {
  auto it = map_.find(tag);
  if (it == map_.end()) {
    throw InputError("category '" + tag + "' is missing from the category map");
  }
  return it->second;
}

std::vector<std::string> CategoryMap::groups() const {
  std::set<std::string> unique;
  for (const auto& [tag, group] : map_) unique.insert(group);
  return {unique.begin(), unique.end()};
}

CategoryMap ParseCategoryMap(const Json& value) {
  const Json& body = value.contains("category_map") ? value["category_map"]
                                                    : value;
  if (!body.is_object()) throw InputError("category map must be a JSON object");
  std::map<std::string, std::string> entries;
  for (const auto& [tag, group] : body.items()) {
    if (!group.is_string()) {
      throw InputError("category map entry '" + tag + "' must be a string");
    }
    entries[tag] = group.get<std::string>();
  }
  return CategoryMap(std::move(entries));
}

Json CategoryMapToJson(const CategoryMap& map) {
  Json out = Json::object();
  for (const auto& [tag, group] : map.entries()) out[tag] = group;
  return out;
}

CategoryMap DefaultChallenge300CategoryMap() {
  return CategoryMap({
      {"commonsense", "Common Sense"},
      {"human behavior", "Common Sense"},
      {"hypothetical", "Common Sense"},
      {"spatial", "Common Sense"},
      {"temporal", "Common Sense"},
      {"comparison", "Comparison"},
      {"estimation", "Comparison"},
      {"meta-reasoning", "Comparison"},
      {"verbal reasoning", "Comparison"},
      {"entity tracking", "Entity"},
      {"false presupposition", "Entity"},
      {"general knowledge", "Entity"},
      {"history", "Entity"},
      {"creative writing", "Creativity"},
      {"example generation", "Creativity"},
      {"explanation", "Creativity"},
      {"story understanding", "Creativity"},
      {"math", "Science"},
      {"science", "Science"},
      {"steps", "Science"},
  });
}

namespace {

constexpr const char* kCorrect = "Correct";
constexpr const char* kPartial = "Partially Correct";

QualityMapping Challenge300Mapping(const CategoryMap& category_map) {
  std::map<std::string, int> tiers{{kCorrect, 2}, {kPartial, 1}};
  std::map<std::string, std::string> categories{{kPartial, kPartial}};
  QualityMapping::LabelPairs comparable;
  for (const auto& group : category_map.groups()) {
    if (group == kCorrect || group == kPartial) {
      throw InputError("category group may not be named '" + group + "'");
    }
    tiers[group] = 0;
    categories[group] = group;
    comparable.insert({kCorrect, group});
  }
  return QualityMapping(std::move(tiers), std::move(categories),
                        std::move(comparable));
}

}  // namespace

AnnotationSet AdaptChallenge300(const std::vector<SourceRow>& rows,
                                const CategoryMap& category_map) {
  AnnotationSet set{"challenge300", {}, Challenge300Mapping(category_map)};
  for (const auto& row : rows) {
    AnnotationRecord record;
    record.context_id = RequireString(row, "question_id");
    record.context_text = RequireString(row, "question");
    record.model_id = RequireString(row, "model");
    record.candidate_id = record.model_id;
    record.candidate_text = RequireString(row, "answer");
    record.source = row.source;
    const double credit = RequireNumber(row, "credit");
    record.raw_scores = {credit};
    const std::string tag = RequireString(row, "category");
    std::string group;
    try {
      group = category_map.GroupOf(tag);
    } catch (const Error& e) {
      throw InputError(row.source + ": " + e.what());
    }
    if (credit == 1.0) {
      record.label = kCorrect;
    } else if (credit == 0.5) {
      record.label = kPartial;
    } else if (credit == 0.0) {
      record.label = group;
    } else {
      std::ostringstream value;
      value << credit;
      throw InputError(row.source + ": credit must be 0, 0.5 or 1, got " +
                       value.str());
    }
    record.attribute = group;
    set.records.push_back(std::move(record));
  }
  return set;
}

// --- SummEval --------------------------------------------------------------

bool SummEvalHighQuality(std::span<const double> ratings) {
  if (ratings.empty()) throw InputError("no ratings");
  std::size_t fives = 0;
  for (double rating : ratings) {
    if (!(rating >= 1.0 && rating <= 5.0) || std::floor(rating) != rating) {
      std::ostringstream value;
      value << rating;
      throw InputError("rating " + value.str() + " is outside 1..5");
    }
    if (rating == 5.0) ++fives;
  }
  return 2 * fives > ratings.size();
}

std::vector<AnnotationSet> AdaptSummEval(const std::vector<SourceRow>& rows) {
  static constexpr std::pair<const char*, const char*> kAspects[] = {
      {"coherence", "Coherence"},
      {"consistency", "Consistency"},
      {"fluency", "Fluency"},
      {"relevance", "Relevance"},
  };
  std::vector<AnnotationSet> sets;
  for (const auto& [key, name] : kAspects) {
    sets.push_back({name, {},
                    QualityMapping({{"High", 1}, {"Low", 0}}, {{"Low", name}})});
  }
  for (const auto& row : rows) {
    AnnotationRecord base;
    base.context_id = RequireString(row, "id");
    base.context_text = RequireString(row, "text");
    base.model_id = RequireString(row, "model_id");
    base.candidate_id = base.model_id;
    base.candidate_text = RequireString(row, "decoded");
    base.source = row.source;
    const Json& experts = Require(row, "expert_annotations");
    if (!experts.is_array() || experts.empty()) {
      throw InputError(row.source +
                       ": 'expert_annotations' must be a non-empty list");
    }
    for (std::size_t a = 0; a < std::size(kAspects); ++a) {
      const auto& [key, name] = kAspects[a];
      std::vector<double> ratings;
      for (const auto& annotation : experts) {
        auto it = annotation.find(key);
        if (!annotation.is_object() || it == annotation.end() ||
            !it->is_number()) {
          throw InputError(row.source + ": expert annotation lacks numeric '" +
                           key + "'");
        }
        ratings.push_back(it->get<double>());
      }
      AnnotationRecord record = base;
      record.raw_scores = ratings;
      try {
        record.label = SummEvalHighQuality(ratings) ? "High" : "Low";
      } catch (const Error& e) {
        throw InputError(row.source + ": " + key + ": " + e.what());
      }
      record.attribute = name;
      sets[a].records.push_back(std::move(record));
    }
  }
  return sets;
}

// --- FRANK -----------------------------------------------------------------

std::string FrankGroup(const std::string& label) {
  static const std::map<std::string, std::string> kGroups = {
      {"No Error", kNoError},
      {"NoE", kNoError},
      {"Semantic Frame", "Semantic Frame"},
      {"RelE", "Semantic Frame"},
      {"EntE", "Semantic Frame"},
      {"CircE", "Semantic Frame"},
      {"Discourse", "Discourse"},
      {"CorefE", "Discourse"},
      {"LinkE", "Discourse"},
      {"Verifiability", "Verifiability"},
      {"OutE", "Verifiability"},
      {"GramE", "Verifiability"},
      {"Other", ""},
      {"OtherE", ""},
  };
  auto it = kGroups.find(label);
  if (it == kGroups.end()) {
    throw InputError("unknown FRANK label '" + label + "'");
  }
  return it->second;
}

AnnotationSet AdaptFrank(const std::vector<SourceRow>& rows) {
  AnnotationSet set{
      "frank",
      {},
      QualityMapping({{kNoError, 1},
                      {"Semantic Frame", 0},
                      {"Discourse", 0},
                      {"Verifiability", 0}},
                     {{"Semantic Frame", "Semantic Frame"},
                      {"Discourse", "Discourse"},
                      {"Verifiability", "Verifiability"}})};
  for (const auto& row : rows) {
    if (auto split = OptionalString(row, "split"); split && *split != "test") {
      continue;
    }
    std::string group;
    try {
      group = FrankGroup(RequireString(row, "label"));
    } catch (const Error& e) {
      throw InputError(row.source + ": " + e.what());
    }
    if (group.empty()) continue;
    AnnotationRecord record;
    record.context_id = RequireString(row, "hash");
    record.context_text = RequireString(row, "article");
    record.model_id = RequireString(row, "model_name");
    record.candidate_id = record.model_id;
    record.candidate_text = RequireString(row, "summary");
    record.label = group;
    record.source = row.source;
    set.records.push_back(std::move(record));
  }
  return set;
}

// --- Generic ---------------------------------------------------------------

MappingConfig ParseMappingConfig(const Json& value) {
  if (!value.is_object()) throw InputError("mapping config must be an object");
  auto field = [&](const char* key) -> const Json& {
    auto it = value.find(key);
    if (it == value.end()) {
      throw InputError(std::string("mapping config lacks '") + key + "'");
    }
    return *it;
  };

  const Json& tiers_json = field("tiers");
  if (!tiers_json.is_object()) throw InputError("'tiers' must be an object");
  std::map<std::string, int> tiers;
  for (const auto& [label, tier] : tiers_json.items()) {
    if (!tier.is_number_integer()) {
      throw InputError("tier of '" + label + "' must be an integer");
    }
    tiers[label] = tier.get<int>();
  }

  if (auto it = value.find("taxonomy"); it != value.end()) {
    if (!it->is_array()) throw InputError("'taxonomy' must be a list");
    std::set<std::string> taxonomy;
    for (const auto& label : *it) {
      if (!label.is_string()) throw InputError("taxonomy labels must be strings");
      taxonomy.insert(label.get<std::string>());
    }
    for (const auto& label : taxonomy) {
      if (!tiers.contains(label)) {
        throw InputError("taxonomy label '" + label + "' has no tier");
      }
    }
    for (const auto& [label, tier] : tiers) {
      if (!taxonomy.contains(label)) {
        throw InputError("tier given for label '" + label +
                         "' outside the taxonomy");
      }
    }
  }

  std::map<std::string, std::string> categories;
  if (auto it = value.find("categories"); it != value.end()) {
    if (!it->is_object()) throw InputError("'categories' must be an object");
    for (const auto& [label, category] : it->items()) {
      if (!category.is_string()) {
        throw InputError("category of '" + label + "' must be a string");
      }
      categories[label] = category.get<std::string>();
    }
  }

  std::optional<QualityMapping::LabelPairs> comparable;
  if (auto it = value.find("comparability");
      it != value.end() && !(it->is_string() && *it == "all")) {
    if (!it->is_array()) {
      throw InputError("'comparability' must be \"all\" or a list of pairs");
    }
    comparable.emplace();
    for (const auto& pair : *it) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string()) {
        throw InputError("comparability entries must be [label, label]");
      }
      comparable->insert(
          {pair[0].get<std::string>(), pair[1].get<std::string>()});
    }
  }

  MappingConfig config{
      QualityMapping(std::move(tiers), std::move(categories),
                     std::move(comparable)),
      std::nullopt};

  if (auto it = value.find("score_rule"); it != value.end() && !it->is_null()) {
    const Json& rule_json = *it;
    if (!rule_json.is_object() || !rule_json.contains("kind")) {
      throw InputError("'score_rule' must be an object with a 'kind'");
    }
    ScoreRule rule;
    const std::string kind = rule_json["kind"].get<std::string>();
    auto label_field = [&](const char* key) {
      auto found = rule_json.find(key);
      if (found == rule_json.end() || !found->is_string()) {
        throw InputError(std::string("score_rule lacks string '") + key + "'");
      }
      std::string label = found->get<std::string>();
      if (!config.mapping.Contains(label)) {
        throw InputError("score_rule label '" + label +
                         "' is not in the taxonomy");
      }
      return label;
    };
    if (kind == "majority") {
      rule.kind = ScoreRule::Kind::kMajority;
      if (!rule_json.contains("value") || !rule_json["value"].is_number()) {
        throw InputError("majority score_rule needs a numeric 'value'");
      }
      rule.value = rule_json["value"].get<double>();
      rule.high_label = label_field("high_label");
      rule.low_label = label_field("low_label");
    } else if (kind == "lookup") {
      rule.kind = ScoreRule::Kind::kLookup;
      auto labels = rule_json.find("labels");
      if (labels == rule_json.end() || !labels->is_array()) {
        throw InputError("lookup score_rule needs 'labels': [[score, label]]");
      }
      for (const auto& entry : *labels) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_string()) {
          throw InputError("lookup entries must be [score, label]");
        }
        const std::string label = entry[1].get<std::string>();
        if (!config.mapping.Contains(label)) {
          throw InputError("score_rule label '" + label +
                           "' is not in the taxonomy");
        }
        rule.labels.push_back({entry[0].get<double>(), label});
      }
    } else {
      throw InputError("unknown score_rule kind '" + kind + "'");
    }
    config.score_rule = std::move(rule);
  }
  return config;
}

Json MappingToJson(const QualityMapping& mapping) {
  Json out = Json::object();
  out["taxonomy"] = mapping.taxonomy();
  Json tiers = Json::object();
  for (const auto& [label, tier] : mapping.tiers()) tiers[label] = tier;
  out["tiers"] = std::move(tiers);
  Json categories = Json::object();
  for (const auto& [label, category] : mapping.categories()) {
    categories[label] = category;
  }
  out["categories"] = std::move(categories);
  if (const auto& pairs = mapping.comparable_pairs()) {
    Json list = Json::array();
    for (const auto& [a, b] : *pairs) list.push_back(Json::array({a, b}));
    out["comparability"] = std::move(list);
  } else {
    out["comparability"] = "all";
  }
  return out;
}

namespace {

std::string DeriveLabel(const std::vector<double>& scores,
                        const ScoreRule& rule) {
  if (rule.kind == ScoreRule::Kind::kMajority) {
    std::size_t hits = 0;
    for (double score : scores) hits += score == rule.value;
    return 2 * hits > scores.size() ? rule.high_label : rule.low_label;
  }
  if (scores.size() != 1) {
    throw InputError("lookup score_rule expects exactly one raw score");
  }
  for (const auto& [score, label] : rule.labels) {
    if (score == scores.front()) return label;
  }
  std::ostringstream value;
  value << scores.front();
  throw InputError("raw score " + value.str() + " has no label in score_rule");
}

}  // namespace

std::vector<AnnotationSet> AdaptGeneric(const std::vector<SourceRow>& rows,
                                        const MappingConfig& config) {
  std::map<std::string, AnnotationSet> by_attribute;
  for (const auto& row : rows) {
    AnnotationRecord record;
    record.context_id = RequireString(row, "context_id");
    record.context_text = RequireString(row, "context_text");
    record.candidate_id = RequireString(row, "candidate_id");
    record.candidate_text = RequireString(row, "candidate_text");
    record.model_id = RequireString(row, "model_id");
    record.attribute = OptionalString(row, "attribute");
    record.source = row.source;
    if (auto label = OptionalString(row, "label")) record.label = *label;
    if (auto it = row.value.find("raw_scores");
        it != row.value.end() && !it->is_null()) {
      if (!it->is_array()) {
        throw InputError(row.source + ": 'raw_scores' must be a list");
      }
      for (const auto& score : *it) {
        if (!score.is_number()) {
          throw InputError(row.source + ": 'raw_scores' must hold numbers");
        }
        record.raw_scores.push_back(score.get<double>());
      }
    }
    if (record.label.empty()) {
      if (record.raw_scores.empty()) {
        throw InputError(row.source + ": row needs 'label' or 'raw_scores'");
      }
      if (!config.score_rule) {
        throw InputError(row.source +
                         ": row has raw_scores but the mapping config has no "
                         "score_rule");
      }
      try {
        record.label = DeriveLabel(record.raw_scores, *config.score_rule);
      } catch (const Error& e) {
        throw InputError(row.source + ": " + e.what());
      }
    }
    if (!config.mapping.Contains(record.label)) {
      throw InputError(row.source + ": label '" + record.label +
                       "' is not in the taxonomy");
    }
    const std::string key = record.attribute.value_or("");
    auto [it, inserted] = by_attribute.try_emplace(key);
    if (inserted) {
      it->second.name = key.empty() ? "generic" : key;
      it->second.mapping = config.mapping;
    }
    it->second.records.push_back(std::move(record));
  }
  std::vector<AnnotationSet> sets;
  for (auto& [key, set] : by_attribute) sets.push_back(std::move(set));
  return sets;
}

}  // namespace nnd::adapters
