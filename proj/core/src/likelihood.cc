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

#include "nnd/likelihood.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <thread>

#include "nnd/error.h"

namespace nnd {

std::string_view SideName(Side side) {
  return side == Side::kHigh ? "high" : "low";
}

std::optional<Side> ParseSide(std::string_view name) {
  if (name == "high") return Side::kHigh;
  if (name == "low") return Side::kLow;
  return std::nullopt;
}

double SequenceLogLikelihood(const ScoredCandidate& scored) {
  if (scored.token_count <= 0 || scored.token_logprobs.empty()) {
    throw ValidationError("test " + scored.test_id + " (" +
                          std::string(SideName(scored.side)) +
                          "): no scored tokens");
  }
  if (static_cast<std::size_t>(scored.token_count) !=
      scored.token_logprobs.size()) {
    throw ValidationError("test " + scored.test_id + " (" +
                          std::string(SideName(scored.side)) +
                          "): token_count does not match token_logprobs");
  }
  double sum = 0.0;
  for (double logprob : scored.token_logprobs) {
    if (!std::isfinite(logprob)) {
      throw ValidationError("test " + scored.test_id + " (" +
                            std::string(SideName(scored.side)) +
                            "): non-finite log-probability");
    }
    sum += logprob;
  }
  return sum / static_cast<double>(scored.token_count);
}

TestOutcome AdministerTest(const NndTest& test, const ScoredCandidate& high,
                           const ScoredCandidate& low) {
  if (high.test_id != test.test_id || low.test_id != test.test_id) {
    throw ValidationError("scores do not belong to test " + test.test_id);
  }
  if (high.side != Side::kHigh || low.side != Side::kLow) {
    throw ValidationError("scores for test " + test.test_id +
                          " are on the wrong side");
  }
  if (high.model_id != low.model_id) {
    throw ValidationError("scores for test " + test.test_id +
                          " come from different models ('" + high.model_id +
                          "', '" + low.model_id + "')");
  }
  TestOutcome outcome;
  outcome.test_id = test.test_id;
  outcome.model_id = high.model_id;
  outcome.ll_high = SequenceLogLikelihood(high);
  outcome.ll_low = SequenceLogLikelihood(low);
  outcome.passed = outcome.ll_high > outcome.ll_low;
  outcome.error_category = test.error_category;
  outcome.attribute = test.attribute;
  return outcome;
}

Administration AdministerSuite(const std::vector<NndTest>& suite,
                               const ScoreIndex& scores, std::size_t threads) {
  std::vector<std::optional<TestOutcome>> slots(suite.size());
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const NndTest& test = suite[i];
      auto high = scores.find({test.test_id, Side::kHigh});
      auto low = scores.find({test.test_id, Side::kLow});
      if (high == scores.end() || low == scores.end()) continue;
      slots[i] = AdministerTest(test, high->second, low->second);
    }
  };

  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(
                                                    1, suite.size()));
  if (threads == 1) {
    run_range(0, suite.size());
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> workers;
      const std::size_t chunk = (suite.size() + threads - 1) / threads;
      for (std::size_t t = 0; t < threads; ++t) {
        const std::size_t begin = std::min(suite.size(), t * chunk);
        const std::size_t end = std::min(suite.size(), begin + chunk);
        workers.emplace_back([&, t, begin, end] {
          try {
            run_range(begin, end);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  Administration result;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    if (slots[i]) {
      result.outcomes.push_back(std::move(*slots[i]));
    } else {
      result.unscored_test_ids.push_back(suite[i].test_id);
    }
  }
  return result;
}

}  // namespace nnd
