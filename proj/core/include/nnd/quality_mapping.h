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

#ifndef NND_QUALITY_MAPPING_H_
#define NND_QUALITY_MAPPING_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nnd/types.h"

namespace nnd {

// Maps annotation labels onto quality tiers (higher is better) and error
// categories. Comparability makes the tiers a partial order: two labels can
// only form a test when they are comparable and their tiers differ.
class QualityMapping {
 public:
  // nullopt means every pair of labels is comparable.
  using LabelPairs = std::set<std::pair<std::string, std::string>>;

  QualityMapping() = default;

  // Throws nnd::Error if a label below the top tier lacks a category, a
  // category names an unknown label, or a comparable pair names an unknown
  // label.
  QualityMapping(std::map<std::string, int> tiers,
                 std::map<std::string, std::string> categories,
                 std::optional<LabelPairs> comparable_pairs = std::nullopt);

  bool Contains(const std::string& label) const;
  int TierOf(const std::string& label) const;
  // Empty for top-tier labels.
  std::optional<std::string> CategoryOf(const std::string& label) const;
  bool Comparable(const std::string& a, const std::string& b) const;
  // Comparable and of differing tier.
  bool Eligible(const std::string& a, const std::string& b) const;

  int max_tier() const { return max_tier_; }
  std::vector<std::string> taxonomy() const;
  const std::map<std::string, int>& tiers() const { return tiers_; }
  const std::map<std::string, std::string>& categories() const {
    return categories_;
  }
  const std::optional<LabelPairs>& comparable_pairs() const {
    return comparable_pairs_;
  }

 private:
  std::map<std::string, int> tiers_;
  std::map<std::string, std::string> categories_;
  // Stored with first <= second.
  std::optional<LabelPairs> comparable_pairs_;
  int max_tier_ = 0;
};

struct QualityAssignment {
  int tier = 0;
  std::optional<std::string> category;

  friend bool operator==(const QualityAssignment&,
                         const QualityAssignment&) = default;
};

// Throws nnd::Error for labels outside the taxonomy, or for records that carry
// raw scores but no label (score-based adapters derive the label first).
QualityAssignment AssignQuality(const AnnotationRecord& record,
                                const QualityMapping& mapping);

}  // namespace nnd

#endif  // NND_QUALITY_MAPPING_H_
