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

#ifndef NND_IO_H_
#define NND_IO_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nnd/stats.h"
#include "nnd/types.h"

namespace nnd {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSuiteSchema = "nnd-suite/1";
inline constexpr std::string_view kScoresSchema = "nnd-scores/1";
inline constexpr std::string_view kResultsSchema = "nnd-results/1";

// Suite files are JSON Lines: an optional header object carrying "schema",
// then one test per line sorted by test_id.
struct SuiteFile {
  Json header;  // null when absent
  std::vector<NndTest> tests;
};

Json TestToJson(const NndTest& test);
// `where` prefixes error messages, e.g. "suite.jsonl:4".
NndTest TestFromJson(const Json& value, const std::string& where);

void WriteSuite(std::ostream& out, const std::vector<NndTest>& tests,
                const Json& header);
SuiteFile ReadSuite(std::istream& in, const std::string& name);
SuiteFile ReadSuiteFile(const std::filesystem::path& path);

struct ScoreLine {
  ScoredCandidate score;
  std::size_t line = 0;
};

// Score files may start with {"schema": "nnd-scores/1", "step": N, ...}.
// Bare NaN / Infinity tokens (as written by Python's json module) are read as
// non-finite values so that validation can report them.
struct ScoreFile {
  std::string name;
  Json header;  // null when absent
  std::optional<std::int64_t> step;
  std::vector<ScoreLine> lines;
};

Json ScoreToJson(const ScoredCandidate& score);
void WriteScores(std::ostream& out, const std::vector<ScoredCandidate>& scores,
                 const Json& header);
ScoreFile ReadScores(std::istream& in, const std::string& name);
ScoreFile ReadScoresFile(const std::filesystem::path& path);

Json ResultToJson(const SuiteResult& result);
SuiteResult ResultFromJson(const Json& value, const std::string& where);

// A results document: {"schema", "provenance", "results": [...]}. A bare
// SuiteResult object is also accepted on read.
struct ResultsFile {
  Json provenance;
  std::vector<SuiteResult> results;
};

Json ResultsToJson(const std::vector<SuiteResult>& results,
                   const Json& provenance);
ResultsFile ReadResultsFile(const std::filesystem::path& path);

Json CorrelationToJson(const Correlation& c);
Json ReportToJson(const VerificationReport& report);

// Parses one JSON value; throws nnd::Error (input) naming `where`.
Json ParseJson(std::string_view text, const std::string& where);
Json ReadJsonFile(const std::filesystem::path& path);

// Writes `text` to `path`, creating parent directories.
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace nnd

#endif  // NND_IO_H_
