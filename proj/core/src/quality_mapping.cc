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

#include "nnd/quality_mapping.h"

#include <algorithm>

#include "nnd/error.h"

namespace nnd {

QualityMapping::QualityMapping(std::map<std::string, int> tiers,
                               std::map<std::string, std::string> categories,
                               std::optional<LabelPairs> comparable_pairs)
    : tiers_(std::move(tiers)), categories_(std::move(categories)) {
  if (tiers_.empty()) throw InputError("quality mapping has no labels");
  max_tier_ = tiers_.begin()->second;
  for (const auto& [label, tier] : tiers_) {
    if (label.empty()) throw InputError("quality mapping has an empty label");
    max_tier_ = std::max(max_tier_, tier);
  }
  for (const auto& [label, category] : categories_) {
    if (!tiers_.contains(label)) {
      throw InputError("category given for unknown label '" + label + "'");
    }
  }
  for (const auto& [label, tier] : tiers_) {
    if (tier == max_tier_) {
      // Top-tier labels carry no error category.
      categories_.erase(label);
      continue;
    }
    auto it = categories_.find(label);
    if (it == categories_.end() || it->second.empty()) {
      throw InputError("label '" + label +
                       "' is below the top tier but has no error category");
    }
  }
  if (comparable_pairs) {
    LabelPairs normalized;
    for (const auto& [a, b] : *comparable_pairs) {
      for (const auto* label : {&a, &b}) {
        if (!tiers_.contains(*label)) {
          throw InputError("comparability names unknown label '" + *label +
                           "'");
        }
      }
      normalized.insert(a <= b ? std::pair(a, b) : std::pair(b, a));
    }
    comparable_pairs_ = std::move(normalized);
  }
}

bool QualityMapping::Contains(const std::string& label) const {
  return tiers_.contains(label);
}

int QualityMapping::TierOf(const std::string& label) const {
  auto it = tiers_.find(label);
  if (it == tiers_.end()) {
    throw InputError("label '" + label + "' is not in the taxonomy");
  }
  return it->second;
}

std::optional<std::string> QualityMapping::CategoryOf(
    const std::string& label) const {
  TierOf(label);
  auto it = categories_.find(label);
  if (it == categories_.end()) return std::nullopt;
  return it->second;
}

bool QualityMapping::Comparable(const std::string& a,
                                const std::string& b) const {
  if (!Contains(a) || !Contains(b)) return false;
  if (!comparable_pairs_) return true;
  return comparable_pairs_->contains(a <= b ? std::pair(a, b)
                                            : std::pair(b, a));
}

bool QualityMapping::Eligible(const std::string& a,
                              const std::string& b) const {
  return Comparable(a, b) && tiers_.at(a) != tiers_.at(b);
}

std::vector<std::string> QualityMapping::taxonomy() const {
  std::vector<std::string> labels;
  labels.reserve(tiers_.size());
  for (const auto& [label, tier] : tiers_) labels.push_back(label);
  return labels;
}

QualityAssignment AssignQuality(const AnnotationRecord& record,
                                const QualityMapping& mapping) {
  if (record.label.empty()) {
    if (!record.raw_scores.empty()) {
      throw InputError(record.source + ": record '" + record.candidate_id +
                       "' has raw scores but no rule to derive a label");
    }
    throw InputError(record.source + ": record '" + record.candidate_id +
                     "' has no label");
  }
  if (!mapping.Contains(record.label)) {
    throw InputError(record.source + ": label '" + record.label +
                     "' is not in the taxonomy");
  }
  return {mapping.TierOf(record.label), mapping.CategoryOf(record.label)};
}

}  // namespace nnd
