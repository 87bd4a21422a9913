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

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "nnd/error.h"
#include "oracles.h"

namespace nnd {
namespace {

ScoredCandidate Scored(std::string test_id, Side side,
                       std::vector<double> logprobs, std::string model = "m") {
  ScoredCandidate s;
  s.test_id = std::move(test_id);
  s.side = side;
  s.model_id = std::move(model);
  s.token_count = static_cast<std::int64_t>(logprobs.size());
  s.token_logprobs = std::move(logprobs);
  return s;
}

NndTest MakeTest(std::string id, std::string category = "Disfluent") {
  NndTest t;
  t.test_id = std::move(id);
  t.context_id = "c";
  t.error_category = std::move(category);
  return t;
}

TEST(SequenceLogLikelihoodTest, ArithmeticMean) {
  EXPECT_DOUBLE_EQ(SequenceLogLikelihood(Scored("t", Side::kHigh, {-1.0, -3.0})),
                   -2.0);
  EXPECT_DOUBLE_EQ(SequenceLogLikelihood(Scored("t", Side::kHigh, {-0.5})), -0.5);
}

TEST(SequenceLogLikelihoodTest, MatchesCompensatedMean) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> logprob(-12.0, 0.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(10);
    for (double& x : v) x = logprob(rng);
    EXPECT_NEAR(SequenceLogLikelihood(Scored("t", Side::kLow, v)),
                oracle::CompensatedMean(v), 1e-12);
  }
}

TEST(SequenceLogLikelihoodTest, ZeroTokensIsAnError) {
  EXPECT_THROW(SequenceLogLikelihood(Scored("t", Side::kHigh, {})), Error);
}

TEST(SequenceLogLikelihoodTest, CountMismatchIsAnError) {
  auto s = Scored("t", Side::kHigh, {-1.0, -2.0});
  s.token_count = 3;
  EXPECT_THROW(SequenceLogLikelihood(s), Error);
}

TEST(SequenceLogLikelihoodTest, NonFiniteIsAnError) {
  EXPECT_THROW(SequenceLogLikelihood(Scored(
                   "t", Side::kHigh, {-1.0, std::numeric_limits<double>::quiet_NaN()})),
               Error);
  EXPECT_THROW(SequenceLogLikelihood(Scored(
                   "t", Side::kHigh, {-std::numeric_limits<double>::infinity()})),
               Error);
}

TEST(SequenceLogLikelihoodProperty, AppendingTheMeanLeavesItUnchanged) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    // Values on a 1/8 grid keep every partial sum exact.
    std::vector<double> v(1 + rng() % 8);
    for (double& x : v) x = -static_cast<double>(rng() % 64) / 8.0;
    const double mean = SequenceLogLikelihood(Scored("t", Side::kHigh, v));
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) v.push_back(mean);
    EXPECT_NEAR(SequenceLogLikelihood(Scored("t", Side::kHigh, v)), mean, 1e-12);
  }
}

TEST(AdministerTestTest, HigherLikelihoodPasses) {
  const auto outcome = AdministerTest(MakeTest("t"), Scored("t", Side::kHigh, {-1.2}),
                                      Scored("t", Side::kLow, {-1.5}));
  EXPECT_TRUE(outcome.passed);
  EXPECT_DOUBLE_EQ(outcome.ll_high, -1.2);
  EXPECT_DOUBLE_EQ(outcome.ll_low, -1.5);
  EXPECT_EQ(outcome.error_category, "Disfluent");
  EXPECT_EQ(outcome.model_id, "m");
}

TEST(AdministerTestTest, TieFails) {
  const auto outcome =
      AdministerTest(MakeTest("t"), Scored("t", Side::kHigh, {-1.0, -2.0}),
                     Scored("t", Side::kLow, {-1.5}));
  EXPECT_FALSE(outcome.passed);
}

TEST(AdministerTestTest, MismatchedScoresAreErrors) {
  const NndTest test = MakeTest("t");
  EXPECT_THROW(AdministerTest(test, Scored("u", Side::kHigh, {-1}),
                              Scored("t", Side::kLow, {-1})),
               Error);
  EXPECT_THROW(AdministerTest(test, Scored("t", Side::kLow, {-1}),
                              Scored("t", Side::kLow, {-1})),
               Error);
  EXPECT_THROW(AdministerTest(test, Scored("t", Side::kHigh, {-1}, "a"),
                              Scored("t", Side::kLow, {-1}, "b")),
               Error);
}

TEST(AdministerTestProperty, RaisingHighLogprobNeverBreaksAPass) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> logprob(-8.0, 0.0);
  std::uniform_real_distribution<double> bump(0.0, 2.0);
  const NndTest test = MakeTest("t");
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> high(1 + rng() % 6), low(1 + rng() % 6);
    for (double& x : high) x = logprob(rng);
    for (double& x : low) x = logprob(rng);
    const bool before = AdministerTest(test, Scored("t", Side::kHigh, high),
                                       Scored("t", Side::kLow, low))
                            .passed;
    high[rng() % high.size()] += bump(rng);
    const bool after = AdministerTest(test, Scored("t", Side::kHigh, high),
                                      Scored("t", Side::kLow, low))
                           .passed;
    if (before) EXPECT_TRUE(after);
  }
}

TEST(AdministerSuiteTest, HandPlantedFixture) {
  // Ten tests; high wins on even indices, ties on 3 and 7, loses otherwise.
  std::vector<NndTest> suite;
  ScoreIndex scores;
  int expected_passes = 0;
  for (int i = 0; i < 10; ++i) {
    const std::string id = "t" + std::to_string(i);
    suite.push_back(MakeTest(id, i < 5 ? "A" : "B"));
    double high = -2.0;
    double low = -2.0;
    if (i % 2 == 0) {
      high = -1.0;
      ++expected_passes;
    } else if (i != 3 && i != 7) {
      low = -1.0;
    }
    scores[{id, Side::kHigh}] = Scored(id, Side::kHigh, {high});
    scores[{id, Side::kLow}] = Scored(id, Side::kLow, {low, low});
  }
  const auto result = AdministerSuite(suite, scores);
  ASSERT_EQ(result.outcomes.size(), 10u);
  int passes = 0;
  for (const auto& o : result.outcomes) passes += o.passed;
  EXPECT_EQ(passes, expected_passes);
  EXPECT_EQ(passes, 5);
}

TEST(AdministerSuiteTest, MissingSideIsUnscored) {
  std::vector<NndTest> suite = {MakeTest("a"), MakeTest("b")};
  ScoreIndex scores;
  scores[{"a", Side::kHigh}] = Scored("a", Side::kHigh, {-1});
  scores[{"a", Side::kLow}] = Scored("a", Side::kLow, {-2});
  scores[{"b", Side::kHigh}] = Scored("b", Side::kHigh, {-1});
  const auto result = AdministerSuite(suite, scores);
  EXPECT_EQ(result.outcomes.size(), 1u);
  EXPECT_EQ(result.unscored_test_ids, std::vector<std::string>{"b"});
}

TEST(AdministerSuiteTest, ThreadCountDoesNotChangeOutcomes) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> logprob(-5.0, 0.0);
  std::vector<NndTest> suite;
  ScoreIndex scores;
  for (int i = 0; i < 257; ++i) {
    const std::string id = "t" + std::to_string(1000 + i);
    suite.push_back(MakeTest(id));
    scores[{id, Side::kHigh}] = Scored(id, Side::kHigh, {logprob(rng), logprob(rng)});
    if (i % 13 != 0) {
      scores[{id, Side::kLow}] = Scored(id, Side::kLow, {logprob(rng)});
    }
  }
  const auto serial = AdministerSuite(suite, scores, 1);
  for (std::size_t threads : {2u, 3u, 8u, 1000u}) {
    const auto parallel = AdministerSuite(suite, scores, threads);
    ASSERT_EQ(parallel.outcomes.size(), serial.outcomes.size());
    for (std::size_t i = 0; i < serial.outcomes.size(); ++i) {
      EXPECT_EQ(parallel.outcomes[i].test_id, serial.outcomes[i].test_id);
      EXPECT_EQ(parallel.outcomes[i].passed, serial.outcomes[i].passed);
    }
    EXPECT_EQ(parallel.unscored_test_ids, serial.unscored_test_ids);
  }
}

TEST(AdministerSuiteTest, ErrorsInWorkersPropagate) {
  std::vector<NndTest> suite;
  ScoreIndex scores;
  for (int i = 0; i < 20; ++i) {
    const std::string id = "t" + std::to_string(i);
    suite.push_back(MakeTest(id));
    scores[{id, Side::kHigh}] = Scored(id, Side::kHigh, {-1});
    scores[{id, Side::kLow}] = Scored(id, Side::kLow, {-1}, i == 17 ? "other" : "m");
  }
  EXPECT_THROW(AdministerSuite(suite, scores, 4), Error);
}

}  // namespace
}  // namespace nnd
