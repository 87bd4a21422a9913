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

#include "nnd/io.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

#include "nnd/error.h"

namespace nnd {
namespace {

const Json& Field(const Json& object, const char* key,
                  const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw InputError(where + ": missing field '" + key + "'");
  }
  return *it;
}

std::string StringField(const Json& object, const char* key,
                        const std::string& where) {
  const Json& value = Field(object, key, where);
  if (!value.is_string()) {
    throw InputError(where + ": field '" + key + "' must be a string");
  }
  return value.get<std::string>();
}

std::int64_t IntField(const Json& object, const char* key,
                      const std::string& where) {
  const Json& value = Field(object, key, where);
  if (!value.is_number_integer()) {
    throw InputError(where + ": field '" + key + "' must be an integer");
  }
  return value.get<std::int64_t>();
}

double NumberField(const Json& object, const char* key,
                   const std::string& where) {
  const Json& value = Field(object, key, where);
  if (!value.is_number()) {
    throw InputError(where + ": field '" + key + "' must be a number");
  }
  return value.get<double>();
}

void RequireObject(const Json& value, const std::string& where) {
  if (!value.is_object()) throw InputError(where + ": expected a JSON object");
}

Json CandidateToJson(const CandidateRef& candidate) {
  Json out = Json::object();
  out["candidate_id"] = candidate.candidate_id;
  out["text"] = candidate.text;
  out["model_id"] = candidate.model_id;
  return out;
}

CandidateRef CandidateFromJson(const Json& value, const std::string& where) {
  RequireObject(value, where);
  return {StringField(value, "candidate_id", where),
          StringField(value, "text", where),
          StringField(value, "model_id", where)};
}

// Quotes bare NaN / Infinity / -Infinity tokens that sit outside strings.
std::string QuoteNonFinite(std::string_view line) {
  std::string out;
  out.reserve(line.size() + 16);
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_string) {
      out.push_back(c);
      if (c == '\\' && i + 1 < line.size()) {
        out.push_back(line[++i]);
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
      out.push_back(c);
      continue;
    }
    bool replaced = false;
    for (std::string_view token : {"-Infinity", "Infinity", "NaN"}) {
      if (line.substr(i, token.size()) == token) {
        out.push_back('"');
        out.append(token);
        out.push_back('"');
        i += token.size() - 1;
        replaced = true;
        break;
      }
    }
    if (!replaced) out.push_back(c);
  }
  return out;
}

double LogprobFromJson(const Json& value, const std::string& where) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const auto& text = value.get_ref<const std::string&>();
    if (text == "NaN") return std::numeric_limits<double>::quiet_NaN();
    if (text == "Infinity") return std::numeric_limits<double>::infinity();
    if (text == "-Infinity") return -std::numeric_limits<double>::infinity();
  }
  throw InputError(where + ": token_logprobs must contain numbers");
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

Json IntervalToJson(const Interval& interval) {
  return Json::array({interval.first, interval.second});
}

Interval IntervalFromJson(const Json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
      !value[1].is_number()) {
    throw InputError(where + ": confidence interval must be [lower, upper]");
  }
  return {value[0].get<double>(), value[1].get<double>()};
}

Json CellsToJson(const std::map<std::string, RateCell>& cells) {
  Json out = Json::object();
  for (const auto& [key, cell] : cells) {
    Json entry = Json::object();
    entry["n_tests"] = cell.n_tests;
    entry["n_passed"] = cell.n_passed;
    entry["pass_rate"] = cell.pass_rate;
    out[key] = std::move(entry);
  }
  return out;
}

std::map<std::string, RateCell> CellsFromJson(const Json& value,
                                              const std::string& where) {
  RequireObject(value, where);
  std::map<std::string, RateCell> cells;
  for (const auto& [key, entry] : value.items()) {
    const std::string at = where + "." + key;
    RequireObject(entry, at);
    cells[key] = {IntField(entry, "n_tests", at), IntField(entry, "n_passed", at),
                  NumberField(entry, "pass_rate", at)};
  }
  return cells;
}

}  // namespace

Json ParseJson(std::string_view text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(where + ": malformed JSON (" + e.what() + ")");
  }
}

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseJson(buffer.str(), path.string());
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

Json TestToJson(const NndTest& test) {
  Json out = Json::object();
  out["test_id"] = test.test_id;
  out["context_id"] = test.context_id;
  out["context_text"] = test.context_text;
  out["high_candidate"] = CandidateToJson(test.high_candidate);
  out["low_candidate"] = CandidateToJson(test.low_candidate);
  out["error_category"] = test.error_category;
  if (test.attribute) out["attribute"] = *test.attribute;
  return out;
}

NndTest TestFromJson(const Json& value, const std::string& where) {
  RequireObject(value, where);
  NndTest test;
  test.test_id = StringField(value, "test_id", where);
  test.context_id = StringField(value, "context_id", where);
  test.context_text = StringField(value, "context_text", where);
  test.high_candidate =
      CandidateFromJson(Field(value, "high_candidate", where), where);
  test.low_candidate =
      CandidateFromJson(Field(value, "low_candidate", where), where);
  test.error_category = StringField(value, "error_category", where);
  if (test.error_category.empty()) {
    throw InputError(where + ": empty error_category");
  }
  if (auto it = value.find("attribute"); it != value.end() && !it->is_null()) {
    if (!it->is_string()) {
      throw InputError(where + ": field 'attribute' must be a string");
    }
    test.attribute = it->get<std::string>();
  }
  return test;
}

void WriteSuite(std::ostream& out, const std::vector<NndTest>& tests,
                const Json& header) {
  if (!header.is_null()) out << header.dump() << '\n';
  for (const auto& test : tests) out << TestToJson(test).dump() << '\n';
}

SuiteFile ReadSuite(std::istream& in, const std::string& name) {
  SuiteFile suite;
  std::string line;
  std::size_t line_number = 0;
  bool first = true;
  std::set<std::string> ids;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    const std::string where = name + ":" + std::to_string(line_number);
    Json value = ParseJson(line, where);
    RequireObject(value, where);
    if (value.contains("schema")) {
      if (!first) throw InputError(where + ": header must be the first line");
      if (value["schema"] != kSuiteSchema) {
        throw InputError(where + ": unsupported suite schema " +
                         value["schema"].dump());
      }
      suite.header = std::move(value);
      first = false;
      continue;
    }
    first = false;
    NndTest test = TestFromJson(value, where);
    if (!suite.tests.empty() && test.test_id <= suite.tests.back().test_id) {
      throw InputError(where + ": tests are not sorted by unique test_id (" +
                       test.test_id + ")");
    }
    suite.tests.push_back(std::move(test));
  }
  return suite;
}

SuiteFile ReadSuiteFile(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  return ReadSuite(in, path.string());
}

Json ScoreToJson(const ScoredCandidate& score) {
  Json out = Json::object();
  out["test_id"] = score.test_id;
  out["side"] = std::string(SideName(score.side));
  out["model_id"] = score.model_id;
  out["token_logprobs"] = score.token_logprobs;
  out["token_count"] = score.token_count;
  return out;
}

void WriteScores(std::ostream& out, const std::vector<ScoredCandidate>& scores,
                 const Json& header) {
  if (!header.is_null()) out << header.dump() << '\n';
  for (const auto& score : scores) out << ScoreToJson(score).dump() << '\n';
}

ScoreFile ReadScores(std::istream& in, const std::string& name) {
  ScoreFile file;
  file.name = name;
  std::string line;
  std::size_t line_number = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    const std::string where = name + ":" + std::to_string(line_number);
    Json value = ParseJson(QuoteNonFinite(line), where);
    RequireObject(value, where);
    if (value.contains("schema")) {
      if (!first) throw InputError(where + ": header must be the first line");
      if (value["schema"] != kScoresSchema) {
        throw InputError(where + ": unsupported scores schema " +
                         value["schema"].dump());
      }
      if (auto it = value.find("step"); it != value.end() && !it->is_null()) {
        if (!it->is_number_integer()) {
          throw InputError(where + ": header 'step' must be an integer");
        }
        file.step = it->get<std::int64_t>();
      }
      file.header = std::move(value);
      first = false;
      continue;
    }
    first = false;
    ScoredCandidate score;
    score.test_id = StringField(value, "test_id", where);
    const std::string side = StringField(value, "side", where);
    auto parsed = ParseSide(side);
    if (!parsed) {
      throw InputError(where + ": side must be \"high\" or \"low\", got \"" +
                       side + "\"");
    }
    score.side = *parsed;
    score.model_id = StringField(value, "model_id", where);
    const Json& logprobs = Field(value, "token_logprobs", where);
    if (!logprobs.is_array()) {
      throw InputError(where + ": token_logprobs must be an array");
    }
    for (const auto& entry : logprobs) {
      score.token_logprobs.push_back(LogprobFromJson(entry, where));
    }
    score.token_count = IntField(value, "token_count", where);
    file.lines.push_back({std::move(score), line_number});
  }
  return file;
}

ScoreFile ReadScoresFile(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  return ReadScores(in, path.string());
}

Json ResultToJson(const SuiteResult& result) {
  Json out = Json::object();
  out["model_id"] = result.model_id;
  out["n_tests"] = result.n_tests;
  out["n_passed"] = result.n_passed;
  out["n_unscored"] = result.n_unscored;
  out["overall_pass_rate"] = result.overall_pass_rate;
  out["per_category"] = CellsToJson(result.per_category);
  if (!result.per_attribute.empty()) {
    out["per_attribute"] = CellsToJson(result.per_attribute);
  }
  if (result.ci95) {
    Json ci = Json::object();
    ci["overall"] = IntervalToJson(result.ci95->overall);
    Json per_category = Json::object();
    for (const auto& [key, interval] : result.ci95->per_category) {
      per_category[key] = IntervalToJson(interval);
    }
    ci["per_category"] = std::move(per_category);
    if (!result.ci95->per_attribute.empty()) {
      Json per_attribute = Json::object();
      for (const auto& [key, interval] : result.ci95->per_attribute) {
        per_attribute[key] = IntervalToJson(interval);
      }
      ci["per_attribute"] = std::move(per_attribute);
    }
    out["ci95"] = std::move(ci);
  }
  return out;
}

SuiteResult ResultFromJson(const Json& value, const std::string& where) {
  RequireObject(value, where);
  SuiteResult result;
  result.model_id = StringField(value, "model_id", where);
  result.n_tests = IntField(value, "n_tests", where);
  result.n_passed = IntField(value, "n_passed", where);
  if (value.contains("n_unscored")) {
    result.n_unscored = IntField(value, "n_unscored", where);
  }
  result.overall_pass_rate = NumberField(value, "overall_pass_rate", where);
  result.per_category =
      CellsFromJson(Field(value, "per_category", where), where);
  if (auto it = value.find("per_attribute"); it != value.end()) {
    result.per_attribute = CellsFromJson(*it, where);
  }
  if (auto it = value.find("ci95"); it != value.end() && !it->is_null()) {
    RequireObject(*it, where);
    ConfidenceIntervals ci;
    ci.overall = IntervalFromJson(Field(*it, "overall", where), where);
    if (auto cats = it->find("per_category"); cats != it->end()) {
      for (const auto& [key, entry] : cats->items()) {
        ci.per_category[key] = IntervalFromJson(entry, where);
      }
    }
    if (auto attrs = it->find("per_attribute"); attrs != it->end()) {
      for (const auto& [key, entry] : attrs->items()) {
        ci.per_attribute[key] = IntervalFromJson(entry, where);
      }
    }
    result.ci95 = std::move(ci);
  }
  return result;
}

Json ResultsToJson(const std::vector<SuiteResult>& results,
                   const Json& provenance) {
  Json out = Json::object();
  out["schema"] = kResultsSchema;
  out["provenance"] = provenance;
  Json list = Json::array();
  for (const auto& result : results) list.push_back(ResultToJson(result));
  out["results"] = std::move(list);
  return out;
}

ResultsFile ReadResultsFile(const std::filesystem::path& path) {
  const Json document = ReadJsonFile(path);
  const std::string where = path.string();
  RequireObject(document, where);
  ResultsFile file;
  if (document.contains("results")) {
    if (auto it = document.find("provenance"); it != document.end()) {
      file.provenance = *it;
    }
    const Json& list = document["results"];
    if (!list.is_array()) throw InputError(where + ": 'results' must be a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      file.results.push_back(
          ResultFromJson(list[i], where + "[" + std::to_string(i) + "]"));
    }
  } else {
    file.results.push_back(ResultFromJson(document, where));
  }
  return file;
}

Json CorrelationToJson(const Correlation& c) {
  return c.value ? Json(*c.value) : Json(nullptr);
}

Json ReportToJson(const VerificationReport& report) {
  Json out = Json::object();
  out["models"] = report.models;
  out["n_pairs"] = report.n_pairs;
  out["rank_tau"] = CorrelationToJson(report.rank_tau);
  out["gap_r"] = CorrelationToJson(report.gap_r);
  Json degenerate = Json::object();
  degenerate["tau"] = report.rank_tau.degenerate();
  degenerate["r"] = report.gap_r.degenerate();
  out["degenerate"] = std::move(degenerate);
  return out;
}

}  // namespace nnd
