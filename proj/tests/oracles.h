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

#ifndef NND_TESTS_ORACLES_H_
#define NND_TESTS_ORACLES_H_

// Reference implementations used only by tests. Each one follows the plain
// definition and shares no code with the library route it checks.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nnd/compile.h"
#include "nnd/quality_mapping.h"
#include "nnd/types.h"

namespace nnd::oracle {

// ASCII-only dedup key: lowercase, trim, collapse runs of spaces.
inline std::string AsciiKey(const std::string& text) {
  std::string out;
  bool space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

// A synthetic labelled group with its own tier and comparability tables.
struct SyntheticMapping {
  std::map<std::string, int> tiers;
  std::set<std::pair<std::string, std::string>> comparable;  // both orders

  QualityMapping ToMapping() const {
    int top = 0;
    for (const auto& [label, tier] : tiers) top = std::max(top, tier);
    std::map<std::string, std::string> categories;
    for (const auto& [label, tier] : tiers) {
      if (tier < top) categories[label] = "cat-" + label;
    }
    QualityMapping::LabelPairs pairs;
    for (const auto& pair : comparable) pairs.insert(pair);
    return QualityMapping(tiers, categories, pairs);
  }
};

using PairKey = std::tuple<std::string, std::string, std::string>;

// Every ordered pair (i, j), i != j, kept when tier(i) > tier(j), the labels are
// comparable, and the ASCII keys differ.
inline std::set<PairKey> BruteForcePairs(
    const std::vector<AnnotationRecord>& records, const SyntheticMapping& m) {
  std::set<PairKey> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (std::size_t j = 0; j < records.size(); ++j) {
      if (i == j) continue;
      const auto& a = records[i];
      const auto& b = records[j];
      if (a.context_id != b.context_id) continue;
      if (m.tiers.at(a.label) <= m.tiers.at(b.label)) continue;
      if (!m.comparable.contains({a.label, b.label})) continue;
      if (AsciiKey(a.candidate_text) == AsciiKey(b.candidate_text)) continue;
      out.insert({a.context_id, a.candidate_id, b.candidate_id});
    }
  }
  return out;
}

// Kendall tau-b from explicit O(n^2) pair classification. Returns false when
// undefined.
inline bool PairCountTau(const std::vector<double>& x,
                         const std::vector<double>& y, double* tau) {
  std::int64_t concordant = 0, discordant = 0, x_only_ties = 0,
               y_only_ties = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0 && dy == 0) continue;
      if (dx == 0) {
        ++x_only_ties;
      } else if (dy == 0) {
        ++y_only_ties;
      } else if ((dx > 0) == (dy > 0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const double denom_x = static_cast<double>(concordant + discordant + y_only_ties);
  const double denom_y = static_cast<double>(concordant + discordant + x_only_ties);
  if (denom_x == 0 || denom_y == 0) return false;
  *tau = static_cast<double>(concordant - discordant) / std::sqrt(denom_x * denom_y);
  return true;
}

// Pearson r by the two-pass definition. Returns false for zero variance.
inline bool TwoPassPearson(const std::vector<double>& x,
                           const std::vector<double>& y, double* r) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return false;
  *r = sxy / std::sqrt(sxx * syy);
  return true;
}

// Neumaier-compensated mean.
inline double CompensatedMean(const std::vector<double>& v) {
  double sum = 0, compensation = 0;
  for (double value : v) {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
  }
  return (sum + compensation) / static_cast<double>(v.size());
}


// Random synthetic dataset: `n_contexts` contexts of up to `max_candidates`
// candidates, 2 or 3 tiers, two labels per tier, random comparability. Texts
// come from a small pool with case and spacing variants so that duplicates
// occur.
struct SyntheticDataset {
  std::vector<AnnotationRecord> records;
  SyntheticMapping mapping;
};

inline SyntheticDataset RandomDataset(std::mt19937_64& rng, int n_contexts,
                                      int max_candidates) {
  static const char* kPool[] = {"what is the capital", "who wrote it",
                                "when did it end", "why is the sky blue",
                                "how many legs"};
  auto uniform = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  SyntheticDataset data;
  const int n_tiers = uniform(2, 3);
  std::vector<std::string> labels;
  for (int t = 0; t < n_tiers; ++t) {
    for (int k = 0; k < 2; ++k) {
      std::string label = "L" + std::to_string(t) + char('a' + k);
      data.mapping.tiers[label] = t;
      labels.push_back(label);
    }
  }
  for (const auto& a : labels) {
    for (const auto& b : labels) {
      if (a < b && rng() % 4 != 0) {
        data.mapping.comparable.insert({a, b});
        data.mapping.comparable.insert({b, a});
      }
    }
  }
  for (int c = 0; c < n_contexts; ++c) {
    const int n = uniform(1, max_candidates);
    for (int i = 0; i < n; ++i) {
      AnnotationRecord r;
      r.context_id = "ctx" + std::to_string(c);
      r.context_text = "context " + std::to_string(c);
      r.candidate_id = "cand" + std::to_string(i);
      r.model_id = "model" + std::to_string(uniform(0, 3));
      std::string text = kPool[uniform(0, 4)];
      switch (uniform(0, 2)) {
        case 0: break;
        case 1: text[0] = static_cast<char>(std::toupper(text[0])); break;
        case 2: text = "  " + text + " "; break;
      }
      r.candidate_text = text;
      r.label = labels[static_cast<std::size_t>(uniform(0, static_cast<int>(labels.size()) - 1))];
      data.records.push_back(std::move(r));
    }
  }
  return data;
}

}  // namespace nnd::oracle

#endif  // NND_TESTS_ORACLES_H_
