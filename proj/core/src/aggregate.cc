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

#include "nnd/aggregate.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "nnd/error.h"

namespace nnd {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t Fnv1a(std::string_view text) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

// Unbiased draw in [0, n). std::uniform_int_distribution differs between
// standard libraries, which would make intervals platform-dependent.
std::uint64_t Bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

double Quantile(const std::vector<double>& sorted, double p) {
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

RateCell MakeCell(std::int64_t n_tests, std::int64_t n_passed) {
  return {n_tests, n_passed,
          static_cast<double>(n_passed) / static_cast<double>(n_tests)};
}

}  // namespace

Interval BootstrapPassRate(const std::vector<bool>& passed, int n_resamples,
                           std::uint64_t seed) {
  if (n_resamples < 1) throw InputError("bootstrap needs at least 1 resample");
  if (passed.empty()) throw InputError("bootstrap over an empty sample");
  std::mt19937_64 rng(SplitMix64(seed));
  const std::uint64_t n = passed.size();
  std::vector<double> rates;
  rates.reserve(static_cast<std::size_t>(n_resamples));
  for (int b = 0; b < n_resamples; ++b) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) hits += passed[Bounded(rng, n)];
    rates.push_back(static_cast<double>(hits) / static_cast<double>(n));
  }
  std::sort(rates.begin(), rates.end());
  return {Quantile(rates, 0.025), Quantile(rates, 0.975)};
}

SuiteResult Aggregate(const std::vector<TestOutcome>& outcomes,
                      const std::optional<BootstrapOptions>& bootstrap,
                      std::int64_t n_unscored) {
  if (outcomes.empty()) throw ValidationError("no scored outcomes to aggregate");
  std::vector<const TestOutcome*> ordered;
  ordered.reserve(outcomes.size());
  for (const auto& outcome : outcomes) {
    if (outcome.model_id != outcomes.front().model_id) {
      throw ValidationError("outcomes mix models '" +
                            outcomes.front().model_id + "' and '" +
                            outcome.model_id + "'");
    }
    ordered.push_back(&outcome);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const TestOutcome* a, const TestOutcome* b) {
              return a->test_id < b->test_id;
            });
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (ordered[i]->test_id == ordered[i - 1]->test_id) {
      throw ValidationError("duplicate outcome for test " +
                            ordered[i]->test_id);
    }
  }

  std::vector<bool> all;
  std::map<std::string, std::vector<bool>> by_category;
  std::map<std::string, std::vector<bool>> by_attribute;
  for (const TestOutcome* outcome : ordered) {
    all.push_back(outcome->passed);
    by_category[outcome->error_category].push_back(outcome->passed);
    if (outcome->attribute) {
      by_attribute[*outcome->attribute].push_back(outcome->passed);
    }
  }

  auto count = [](const std::vector<bool>& v) {
    return static_cast<std::int64_t>(std::count(v.begin(), v.end(), true));
  };

  SuiteResult result;
  result.model_id = outcomes.front().model_id;
  result.n_tests = static_cast<std::int64_t>(all.size());
  result.n_passed = count(all);
  result.n_unscored = n_unscored;
  result.overall_pass_rate =
      static_cast<double>(result.n_passed) / static_cast<double>(result.n_tests);
  for (const auto& [key, v] : by_category) {
    result.per_category[key] = MakeCell(static_cast<std::int64_t>(v.size()), count(v));
  }
  for (const auto& [key, v] : by_attribute) {
    result.per_attribute[key] = MakeCell(static_cast<std::int64_t>(v.size()), count(v));
  }

  if (bootstrap) {
    const auto key_seed = [&](std::string_view key) {
      return bootstrap->seed ^ Fnv1a(key);
    };
    ConfidenceIntervals ci;
    ci.overall = BootstrapPassRate(all, bootstrap->n_resamples,
                                   key_seed("overall"));
    for (const auto& [key, v] : by_category) {
      ci.per_category[key] = BootstrapPassRate(v, bootstrap->n_resamples,
                                               key_seed("category:" + key));
    }
    for (const auto& [key, v] : by_attribute) {
      ci.per_attribute[key] = BootstrapPassRate(v, bootstrap->n_resamples,
                                                key_seed("attribute:" + key));
    }
    result.ci95 = std::move(ci);
  }
  return result;
}

}  // namespace nnd
