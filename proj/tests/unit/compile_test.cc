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
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "nnd/error.h"
#include "nnd/test_id.h"
#include "oracles.h"

namespace nnd {
namespace {

AnnotationRecord Record(std::string context, std::string id, std::string text,
                        std::string label, std::string model = "m") {
  AnnotationRecord r;
  r.context_id = std::move(context);
  r.context_text = "context of " + r.context_id;
  r.candidate_id = std::move(id);
  r.candidate_text = std::move(text);
  r.model_id = std::move(model);
  r.label = std::move(label);
  r.source = "test:" + r.candidate_id;
  return r;
}

QualityMapping TwoTier() {
  return QualityMapping({{"No Error", 1}, {"Not Fluent", 0}, {"Not Factual", 0}},
                        {{"Not Fluent", "Not Fluent"},
                         {"Not Factual", "Not Factual"}});
}

TEST(GroupByContextTest, PartitionsByKey) {
  std::vector<AnnotationRecord> records = {
      Record("b", "1", "x", "No Error"), Record("a", "1", "x", "No Error"),
      Record("b", "2", "y", "No Error"), Record("b", "3", "z", "No Error"),
      Record("a", "2", "w", "No Error"), Record("b", "4", "v", "No Error")};
  const auto groups = GroupByContext(records);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups.begin()->first, "a");
  EXPECT_EQ(groups.at("a").size(), 2u);
  EXPECT_EQ(groups.at("b").size(), 4u);
}

TEST(GroupByContextTest, EmptyInput) {
  EXPECT_TRUE(GroupByContext({}).empty());
}

TEST(GroupByContextTest, DuplicateCandidateNamesBothRecords) {
  auto first = Record("a", "1", "x", "No Error");
  first.source = "in.jsonl:3";
  auto second = Record("a", "1", "y", "Not Fluent");
  second.source = "in.jsonl:9";
  try {
    GroupByContext({first, second});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    const std::string message = e.what();
    EXPECT_NE(message.find("in.jsonl:3"), std::string::npos) << message;
    EXPECT_NE(message.find("in.jsonl:9"), std::string::npos) << message;
  }
}

// Candidates 1 and 4 high, 2, 3 and 5 low.
TEST(GeneratePairsTest, HighLowPatternGivesProductOfCounts) {
  std::vector<AnnotationRecord> group = {
      Record("c", "1", "one", "No Error"), Record("c", "2", "two", "Not Fluent"),
      Record("c", "3", "three", "Not Factual"),
      Record("c", "4", "four", "No Error"),
      Record("c", "5", "five", "Not Fluent")};
  const auto tests = GeneratePairs(group, TwoTier(), {});
  ASSERT_EQ(tests.size(), 6u);
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& t : tests) {
    pairs.insert({t.high_candidate.candidate_id, t.low_candidate.candidate_id});
  }
  EXPECT_EQ(pairs, (std::set<std::pair<std::string, std::string>>{
                       {"1", "2"}, {"1", "3"}, {"1", "5"},
                       {"4", "2"}, {"4", "3"}, {"4", "5"}}));
  EXPECT_TRUE(std::is_sorted(tests.begin(), tests.end(),
                             [](const NndTest& a, const NndTest& b) {
                               return a.test_id < b.test_id;
                             }));
}

TEST(GeneratePairsTest, AllHighGivesNothing) {
  std::vector<AnnotationRecord> group = {Record("c", "1", "a", "No Error"),
                                         Record("c", "2", "b", "No Error")};
  EXPECT_TRUE(GeneratePairs(group, TwoTier(), {}).empty());
}

TEST(GeneratePairsTest, NormalizedDuplicatesAreSkipped) {
  std::vector<AnnotationRecord> group = {
      Record("c", "1", "When was it built?", "No Error"),
      Record("c", "2", "  when was it   built? ", "Not Fluent"),
      Record("c", "3", "Who built it?", "Not Factual")};
  const auto tests = GeneratePairs(group, TwoTier(), {});
  ASSERT_EQ(tests.size(), 1u);
  EXPECT_EQ(tests[0].low_candidate.candidate_id, "3");
  EXPECT_EQ(tests[0].error_category, "Not Factual");

  // Case-sensitive dedup keeps the pair.
  NormalizationConfig case_sensitive;
  case_sensitive.lowercase_for_dedup = false;
  EXPECT_EQ(GeneratePairs(group, TwoTier(), case_sensitive).size(), 2u);
}

TEST(GeneratePairsTest, StoredTextKeepsCase) {
  std::vector<AnnotationRecord> group = {
      Record("c", "1", "  Paris  is\tbig ", "No Error"),
      Record("c", "2", "LONDON", "Not Factual")};
  const auto tests = GeneratePairs(group, TwoTier(), {});
  ASSERT_EQ(tests.size(), 1u);
  EXPECT_EQ(tests[0].high_candidate.text, "Paris is big");
  EXPECT_EQ(tests[0].low_candidate.text, "LONDON");
}

TEST(GeneratePairsTest, IncomparableLabelsAreNotPaired) {
  QualityMapping mapping(
      {{"No Error", 2}, {"Not Fluent", 1}, {"Not Factual", 0}},
      {{"Not Fluent", "Not Fluent"}, {"Not Factual", "Not Factual"}},
      QualityMapping::LabelPairs{{"No Error", "Not Fluent"},
                                 {"No Error", "Not Factual"}});
  std::vector<AnnotationRecord> group = {Record("c", "1", "a", "No Error"),
                                         Record("c", "2", "b", "Not Fluent"),
                                         Record("c", "3", "c", "Not Factual")};
  const auto tests = GeneratePairs(group, mapping, {});
  EXPECT_EQ(tests.size(), 2u);
  for (const auto& t : tests) EXPECT_EQ(t.high_candidate.candidate_id, "1");
}

TEST(GeneratePairsTest, ThreeTiersGiveThreeTests) {
  QualityMapping mapping({{"good", 2}, {"ok", 1}, {"bad", 0}},
                         {{"ok", "minor"}, {"bad", "major"}});
  std::vector<AnnotationRecord> group = {Record("c", "1", "a", "good"),
                                         Record("c", "2", "b", "ok"),
                                         Record("c", "3", "c", "bad")};
  const auto tests = GeneratePairs(group, mapping, {});
  ASSERT_EQ(tests.size(), 3u);
  std::map<std::pair<std::string, std::string>, std::string> categories;
  for (const auto& t : tests) {
    categories[{t.high_candidate.candidate_id, t.low_candidate.candidate_id}] =
        t.error_category;
  }
  EXPECT_EQ(categories.at({"1", "2"}), "minor");
  EXPECT_EQ(categories.at({"1", "3"}), "major");
  EXPECT_EQ(categories.at({"2", "3"}), "major");
}

TEST(GeneratePairsTest, SameModelCandidatesArePaired) {
  std::vector<AnnotationRecord> group = {
      Record("c", "1", "a", "No Error", "same"),
      Record("c", "2", "b", "Not Fluent", "same")};
  EXPECT_EQ(GeneratePairs(group, TwoTier(), {}).size(), 1u);
}

TEST(GeneratePairsTest, MixedContextsAreRejected) {
  std::vector<AnnotationRecord> group = {Record("c", "1", "a", "No Error"),
                                         Record("d", "2", "b", "Not Fluent")};
  EXPECT_THROW(GeneratePairs(group, TwoTier(), {}), Error);
}

TEST(GeneratePairsTest, TestIdIsHashOfIdentifiers) {
  std::vector<AnnotationRecord> group = {Record("c", "1", "a", "No Error"),
                                         Record("c", "2", "b", "Not Fluent")};
  const auto tests = GeneratePairs(group, TwoTier(), {});
  ASSERT_EQ(tests.size(), 1u);
  EXPECT_EQ(tests[0].test_id, MakeTestId("c", "1", "2", std::nullopt));
  EXPECT_EQ(tests[0].test_id.size(), 16u);
}

TEST(CompileSuiteTest, EmptyInputGivesEmptySuite) {
  EXPECT_TRUE(CompileSuite({}, TwoTier(), {}).empty());
}

TEST(CompileSuiteTest, UnknownLabelIsAnError) {
  EXPECT_THROW(CompileSuite({Record("c", "1", "a", "Sloppy")}, TwoTier(), {}),
               Error);
}

TEST(CompileSuiteTest, EmptyTextIsAnError) {
  EXPECT_THROW(CompileSuite({Record("c", "1", "  \t ", "No Error")}, TwoTier(), {}),
               Error);
}

TEST(CompileSuiteTest, SyntheticThreeContextFixtureMatchesBruteForce) {
  std::mt19937_64 rng(20260101);
  const auto data = oracle::RandomDataset(rng, 3, 8);
  const auto suite = CompileSuite(data.records, data.mapping.ToMapping(), {});
  std::set<oracle::PairKey> got;
  for (const auto& t : suite) {
    got.insert({t.context_id, t.high_candidate.candidate_id,
                t.low_candidate.candidate_id});
  }
  EXPECT_EQ(got, oracle::BruteForcePairs(data.records, data.mapping));
  EXPECT_EQ(got.size(), suite.size());
}

// Completeness and soundness on many random small groups.
TEST(CompileSuiteProperty, EqualsBruteForceEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto data = oracle::RandomDataset(rng, 1 + static_cast<int>(rng() % 3), 8);
    const QualityMapping mapping = data.mapping.ToMapping();
    const auto suite = CompileSuite(data.records, mapping, {});
    std::set<oracle::PairKey> got;
    for (const auto& t : suite) {
      got.insert({t.context_id, t.high_candidate.candidate_id,
                  t.low_candidate.candidate_id});
    }
    ASSERT_EQ(got, oracle::BruteForcePairs(data.records, data.mapping))
        << "trial " << trial;
  }
}

TEST(CompileSuiteProperty, EmittedTestsAreSound) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto data = oracle::RandomDataset(rng, 4, 8);
    const QualityMapping mapping = data.mapping.ToMapping();
    std::map<std::pair<std::string, std::string>, const AnnotationRecord*> by_id;
    for (const auto& r : data.records) by_id[{r.context_id, r.candidate_id}] = &r;
    for (const auto& t : CompileSuite(data.records, mapping, {})) {
      const auto* high = by_id.at({t.context_id, t.high_candidate.candidate_id});
      const auto* low = by_id.at({t.context_id, t.low_candidate.candidate_id});
      EXPECT_GT(mapping.TierOf(high->label), mapping.TierOf(low->label));
      EXPECT_TRUE(mapping.Comparable(high->label, low->label));
      EXPECT_NE(DedupKey(t.high_candidate.text, {}),
                DedupKey(t.low_candidate.text, {}));
      EXPECT_FALSE(t.error_category.empty());
    }
  }
}

TEST(CompileSuiteProperty, DeterministicUnderInputPermutation) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto data = oracle::RandomDataset(rng, 4, 8);
    const QualityMapping mapping = data.mapping.ToMapping();
    const auto first = CompileSuite(data.records, mapping, {});
    std::shuffle(data.records.begin(), data.records.end(), rng);
    EXPECT_EQ(CompileSuite(data.records, mapping, {}), first);
  }
}

TEST(CompileSetsTest, AttributesKeepTestsDistinct) {
  auto a = Record("c", "1", "a", "No Error");
  auto b = Record("c", "2", "b", "Not Fluent");
  AnnotationSet fluency{"Fluency", {a, b}, TwoTier()};
  a.attribute = b.attribute = "Coherence";
  AnnotationSet coherence{"Coherence", {a, b}, TwoTier()};
  for (auto& r : fluency.records) r.attribute = "Fluency";
  const auto suite = CompileSets({fluency, coherence}, {});
  ASSERT_EQ(suite.size(), 2u);
  EXPECT_NE(suite[0].test_id, suite[1].test_id);
}

}  // namespace
}  // namespace nnd
