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

#include "cli/commands.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "nnd/adapters.h"
#include "nnd/aggregate.h"
#include "nnd/compile.h"
#include "nnd/error.h"
#include "nnd/io.h"
#include "nnd/likelihood.h"
#include "nnd/render.h"
#include "nnd/score_check.h"
#include "nnd/series.h"
#include "nnd/stats.h"

namespace nnd::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kVersion = "0.1.0";

// Effective settings after applying defaults, then the config file, then
// command-line flags.
struct Settings {
  std::optional<std::uint64_t> seed;
  int n_resamples = 1000;
  std::size_t threads = 1;
  std::string format;
  NormalizationConfig normalization;
};

struct GlobalFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> n_resamples;
  std::optional<std::size_t> threads;
  std::string format;
  std::string out_path;
};

Settings ResolveSettings(const GlobalFlags& flags,
                         const std::string& default_format) {
  Settings settings;
  settings.format = default_format;
  if (!flags.config_path.empty()) {
    const Json config = ReadJsonFile(flags.config_path);
    if (!config.is_object()) {
      throw InputError(flags.config_path + ": config must be a JSON object");
    }
    try {
      if (config.contains("seed")) settings.seed = config["seed"].get<std::uint64_t>();
      if (config.contains("n_resamples")) {
        settings.n_resamples = config["n_resamples"].get<int>();
      }
      if (config.contains("threads")) {
        settings.threads = config["threads"].get<std::size_t>();
      }
      if (config.contains("format")) {
        settings.format = config["format"].get<std::string>();
      }
      if (config.contains("normalization")) {
        const Json& norm = config["normalization"];
        auto flag = [&](const char* key, bool& target) {
          if (norm.contains(key)) target = norm[key].get<bool>();
        };
        flag("collapse_whitespace", settings.normalization.collapse_whitespace);
        flag("unicode_nfc", settings.normalization.unicode_nfc);
        flag("lowercase_for_dedup", settings.normalization.lowercase_for_dedup);
        flag("strip_outer_quotes", settings.normalization.strip_outer_quotes);
      }
    } catch (const Json::exception& e) {
      throw InputError(flags.config_path + ": " + e.what());
    }
  }
  if (flags.seed) settings.seed = flags.seed;
  if (flags.n_resamples) settings.n_resamples = *flags.n_resamples;
  if (flags.threads) settings.threads = *flags.threads;
  if (!flags.format.empty()) settings.format = flags.format;
  if (settings.n_resamples < 1) throw InputError("n_resamples must be >= 1");
  if (settings.threads < 1) settings.threads = 1;
  return settings;
}

Json NormalizationToJson(const NormalizationConfig& norm) {
  Json out = Json::object();
  out["collapse_whitespace"] = norm.collapse_whitespace;
  out["unicode_nfc"] = norm.unicode_nfc;
  out["lowercase_for_dedup"] = norm.lowercase_for_dedup;
  out["strip_outer_quotes"] = norm.strip_outer_quotes;
  return out;
}

Json SettingsToJson(const Settings& settings) {
  Json out = Json::object();
  out["seed"] = settings.seed ? Json(*settings.seed) : Json(nullptr);
  out["n_resamples"] = settings.n_resamples;
  out["threads"] = settings.threads;
  out["format"] = settings.format;
  out["normalization"] = NormalizationToJson(settings.normalization);
  return out;
}

// Inputs are recorded by file name only so outputs do not depend on where the
// inputs live.
Json Provenance(const std::string& command, const Settings& settings,
                const std::vector<std::string>& inputs) {
  Json out = Json::object();
  out["tool"] = "nnd";
  out["version"] = kVersion;
  out["command"] = command;
  out["config"] = SettingsToJson(settings);
  Json names = Json::array();
  for (const auto& input : inputs) names.push_back(fs::path(input).filename().string());
  out["inputs"] = std::move(names);
  return out;
}

std::optional<BootstrapOptions> Bootstrap(const Settings& settings) {
  if (!settings.seed) return std::nullopt;
  return BootstrapOptions{settings.n_resamples, *settings.seed};
}

void RequireFormat(const std::string& format,
                   std::initializer_list<const char*> allowed) {
  for (const char* name : allowed) {
    if (format == name) return;
  }
  std::string message = "unsupported --format '" + format + "'; expected one of";
  for (const char* name : allowed) message += std::string(" ") + name;
  throw InputError(message);
}

void Emit(const std::string& out_path, const std::string& text,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    WriteTextFile(out_path, text);
  }
}

std::string CountsLine(std::int64_t total,
                       const std::map<std::string, std::int64_t>& counts) {
  std::string line = std::to_string(total) + " tests";
  if (!counts.empty()) {
    line += " (";
    bool first = true;
    for (const auto& [key, n] : counts) {
      if (!first) line += "/";
      line += std::to_string(n);
      first = false;
    }
    line += ")";
  }
  return line;
}

// --- build -----------------------------------------------------------------

struct BuildArgs {
  std::string kind;
  std::string input;
  std::string mapping;
  std::string category_map;
};

int Build(const BuildArgs& args, const GlobalFlags& flags, std::ostream& out,
          std::ostream& err) {
  const Settings settings = ResolveSettings(flags, "table");
  RequireFormat(settings.format, {"table", "json"});
  if (flags.out_path.empty()) throw InputError("build requires --out PATH");

  const auto rows = adapters::ReadRowsFile(args.input);
  std::vector<AnnotationSet> sets;
  Json header = Json::object();
  header["schema"] = kSuiteSchema;
  header["dataset"] = args.kind;
  std::vector<std::string> inputs{args.input};

  if (args.kind == "quiz_design") {
    sets.push_back(adapters::AdaptQuizDesign(rows));
  } else if (args.kind == "challenge300") {
    adapters::CategoryMap category_map =
        adapters::DefaultChallenge300CategoryMap();
    if (!args.category_map.empty()) {
      category_map = adapters::ParseCategoryMap(ReadJsonFile(args.category_map));
      inputs.push_back(args.category_map);
    }
    sets.push_back(adapters::AdaptChallenge300(rows, category_map));
    header["category_map"] = adapters::CategoryMapToJson(category_map);
  } else if (args.kind == "summeval") {
    sets = adapters::AdaptSummEval(rows);
  } else if (args.kind == "frank") {
    sets.push_back(adapters::AdaptFrank(rows));
  } else if (args.kind == "generic") {
    if (args.mapping.empty()) {
      throw InputError("build generic requires --mapping PATH");
    }
    const auto config = adapters::ParseMappingConfig(ReadJsonFile(args.mapping));
    inputs.push_back(args.mapping);
    sets = adapters::AdaptGeneric(rows, config);
  } else {
    throw InputError("unknown dataset kind '" + args.kind +
                     "' (expected quiz_design, challenge300, summeval, frank, "
                     "generic)");
  }

  const std::vector<NndTest> suite = CompileSets(sets, settings.normalization);

  std::size_t n_records = 0;
  Json mappings = Json::object();
  for (const auto& set : sets) {
    n_records += set.records.size();
    mappings[set.name] = adapters::MappingToJson(set.mapping);
  }
  header["n_tests"] = suite.size();
  header["mappings"] = std::move(mappings);
  header["provenance"] = Provenance("build", settings, inputs);

  std::ostringstream file;
  WriteSuite(file, suite, header);
  WriteTextFile(flags.out_path, file.str());

  std::map<std::string, std::int64_t> per_category;
  std::map<std::string, std::int64_t> per_attribute;
  for (const auto& test : suite) {
    ++per_category[test.error_category];
    if (test.attribute) ++per_attribute[*test.attribute];
  }
  if (suite.empty()) {
    err << "warning: no tests generated from " << n_records << " records\n";
  }
  if (settings.format == "json") {
    Json report = Json::object();
    report["dataset"] = args.kind;
    report["n_records"] = n_records;
    report["n_tests"] = suite.size();
    report["per_category"] = per_category;
    report["per_attribute"] = per_attribute;
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  out << "built " << suite.size() << " tests from " << n_records << " records ("
      << args.kind << ")\n";
  for (const auto& [key, n] : per_category) {
    out << "  category " << key << ": " << n << "\n";
  }
  for (const auto& [key, n] : per_attribute) {
    out << "  attribute " << key << ": " << n << "\n";
  }
  out << CountsLine(static_cast<std::int64_t>(suite.size()), per_category)
      << "\n";
  return kExitOk;
}

// --- check-scores ----------------------------------------------------------

std::vector<ScoreFile> ReadScoreFiles(const std::vector<std::string>& paths) {
  std::vector<ScoreFile> files;
  for (const auto& path : paths) files.push_back(ReadScoresFile(path));
  return files;
}

Json ScoreCheckToJson(const ScoreCheckReport& report) {
  Json out = Json::object();
  Json models = Json::array();
  for (const auto& model : report.models) {
    Json entry = Json::object();
    entry["model_id"] = model.model_id;
    entry["n_tests"] = model.n_tests;
    entry["n_covered"] = model.n_covered;
    entry["coverage"] = model.coverage();
    entry["missing_test_ids"] = model.missing_test_ids;
    models.push_back(std::move(entry));
  }
  out["models"] = std::move(models);
  out["n_orphans"] = report.n_orphans;
  out["n_duplicates"] = report.n_duplicates;
  out["violations"] = report.violations;
  out["warnings"] = report.warnings;
  out["ok"] = report.ok();
  return out;
}

// Paths in messages are reduced to file names so reports are portable.
std::vector<ScoreFile> WithBaseNames(std::vector<ScoreFile> files) {
  for (auto& file : files) file.name = fs::path(file.name).filename().string();
  return files;
}

int CheckScoresCommand(const std::string& suite_path,
                       const std::vector<std::string>& score_paths,
                       const GlobalFlags& flags, std::ostream& out) {
  const Settings settings = ResolveSettings(flags, "table");
  RequireFormat(settings.format, {"table", "json"});
  const SuiteFile suite = ReadSuiteFile(suite_path);
  const auto files = WithBaseNames(ReadScoreFiles(score_paths));
  const ScoreCheckReport report = CheckScores(suite.tests, files);
  std::string text;
  if (settings.format == "json") {
    text = ScoreCheckToJson(report).dump(2) + "\n";
  } else {
    text = "suite: " + std::to_string(suite.tests.size()) + " tests\n" +
           FormatScoreCheck(report);
  }
  Emit(flags.out_path, text, out);
  if (!flags.out_path.empty() && settings.format != "json") out << text;
  return report.ok() ? kExitOk : kExitValidationFailure;
}

// --- administer ------------------------------------------------------------

struct AdministerArgs {
  std::string suite;
  std::vector<std::string> scores;
  std::string csv_path;
  std::string svg_path;
};

int AdministerCommand(const AdministerArgs& args, const GlobalFlags& flags,
                      std::ostream& out, std::ostream& err) {
  const Settings settings = ResolveSettings(flags, "json");
  RequireFormat(settings.format, {"table", "json", "csv", "svg"});
  const SuiteFile suite = ReadSuiteFile(args.suite);
  const auto files = WithBaseNames(ReadScoreFiles(args.scores));
  const auto index = IndexScores(suite.tests, files);
  const auto bootstrap = Bootstrap(settings);

  std::vector<SuiteResult> results;
  std::vector<std::string> unevaluated;
  for (const auto& [model, scores] : index) {
    Administration administration =
        AdministerSuite(suite.tests, scores, settings.threads);
    if (administration.outcomes.empty()) {
      unevaluated.push_back(model);
      err << "warning: model '" << model
          << "' has no fully scored tests; reported as unevaluated\n";
      continue;
    }
    results.push_back(Aggregate(
        administration.outcomes, bootstrap,
        static_cast<std::int64_t>(administration.unscored_test_ids.size())));
  }
  if (results.empty()) {
    throw ValidationError("no model has any fully scored test");
  }

  std::vector<std::string> inputs{args.suite};
  inputs.insert(inputs.end(), args.scores.begin(), args.scores.end());
  Json document = ResultsToJson(results, Provenance("administer", settings, inputs));
  document["unevaluated"] = unevaluated;

  out << RenderTable(results);
  if (!flags.out_path.empty()) {
    std::string text;
    if (settings.format == "json") {
      text = document.dump(2) + "\n";
    } else if (settings.format == "csv") {
      text = RenderCsv(results);
    } else if (settings.format == "svg") {
      text = RenderBarSvg(results);
    } else {
      text = RenderTable(results);
    }
    WriteTextFile(flags.out_path, text);
  }
  if (!args.csv_path.empty()) WriteTextFile(args.csv_path, RenderCsv(results));
  if (!args.svg_path.empty()) WriteTextFile(args.svg_path, RenderBarSvg(results));
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct HumanScores {
  std::map<std::string, double> overall;
  std::map<std::string, std::map<std::string, double>> per_category;
};

std::map<std::string, double> ModelValues(const Json& value,
                                          const std::string& where) {
  if (!value.is_object()) throw InputError(where + ": expected {model: score}");
  std::map<std::string, double> values;
  for (const auto& [model, score] : value.items()) {
    if (!score.is_number()) {
      throw InputError(where + ": score of '" + model + "' must be a number");
    }
    values[model] = score.get<double>();
  }
  return values;
}

HumanScores ReadHumanScores(const std::string& path) {
  const Json document = ReadJsonFile(path);
  if (!document.is_object()) throw InputError(path + ": expected an object");
  HumanScores human;
  if (document.contains("overall") || document.contains("per_category")) {
    if (document.contains("overall")) {
      human.overall = ModelValues(document["overall"], path + ".overall");
    }
    if (document.contains("per_category")) {
      const Json& cats = document["per_category"];
      if (!cats.is_object()) throw InputError(path + ": per_category must be an object");
      for (const auto& [key, values] : cats.items()) {
        human.per_category[key] =
            ModelValues(values, path + ".per_category." + key);
      }
    }
  } else {
    human.overall = ModelValues(document, path);
  }
  return human;
}

std::string Fixed3(const Correlation& c) {
  if (!c.value) return "degenerate";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", *c.value);
  return buffer;
}

Json MacroToJson(const MacroAverage& macro) {
  Json out = Json::object();
  out["rank_tau"] = CorrelationToJson(macro.rank_tau);
  out["gap_r"] = CorrelationToJson(macro.gap_r);
  out["n_tau"] = macro.n_tau;
  out["n_r"] = macro.n_r;
  return out;
}

int VerifyCommand(const std::vector<std::string>& result_paths,
                  const std::string& human_path, bool per_category,
                  const GlobalFlags& flags, std::ostream& out) {
  const Settings settings = ResolveSettings(flags, "json");
  RequireFormat(settings.format, {"table", "json"});
  std::map<std::string, SuiteResult> results;
  for (const auto& path : result_paths) {
    for (auto& result : ReadResultsFile(path).results) {
      const std::string model = result.model_id;
      if (!results.emplace(model, std::move(result)).second) {
        throw ValidationError("model '" + model +
                              "' appears in more than one result");
      }
    }
  }
  const HumanScores human = ReadHumanScores(human_path);

  std::map<std::string, double> metric;
  for (const auto& [model, result] : results) {
    metric[model] = result.overall_pass_rate;
  }
  if (human.overall.empty()) {
    throw InputError(human_path + ": no overall human scores");
  }
  const VerificationReport overall =
      Verify(ModelScoreTable(metric, human.overall));

  Json document = ReportToJson(overall);
  std::ostringstream text;
  text << "overall\n" << RenderVerification(overall);

  if (per_category) {
    Json per = Json::object();
    std::vector<VerificationReport> reports;
    for (const auto& [category, values] : human.per_category) {
      std::map<std::string, double> category_metric;
      for (const auto& [model, result] : results) {
        auto it = result.per_category.find(category);
        if (it == result.per_category.end()) {
          it = result.per_attribute.find(category);
          if (it == result.per_attribute.end()) {
            throw ValidationError("model '" + model + "' has no pass rate for '" +
                                  category + "'");
          }
        }
        category_metric[model] = it->second.pass_rate;
      }
      reports.push_back(Verify(ModelScoreTable(category_metric, values)));
      per[category] = ReportToJson(reports.back());
      text << "category " << category << "\n" << RenderVerification(reports.back());
    }
    document["per_category"] = std::move(per);
    const MacroAverage macro = Average(reports);
    document["macro_average"] = MacroToJson(macro);
    text << "macro average over " << reports.size() << " categories: tau "
         << Fixed3(macro.rank_tau) << ", r " << Fixed3(macro.gap_r)
         << "\n";
  }
  std::vector<std::string> inputs = result_paths;
  inputs.push_back(human_path);
  document["provenance"] = Provenance("verify", settings, inputs);

  out << text.str();
  if (!flags.out_path.empty()) {
    WriteTextFile(flags.out_path, settings.format == "json"
                                      ? document.dump(2) + "\n"
                                      : text.str());
  }
  return kExitOk;
}

// --- series ----------------------------------------------------------------

Json SeriesToJson(const Series& series, const Json& provenance) {
  Json out = Json::object();
  out["schema"] = "nnd-series/1";
  out["provenance"] = provenance;
  Json models = Json::object();
  for (const auto& [model, points] : series.per_model) {
    Json list = Json::array();
    for (const auto& point : points) {
      Json entry = Json::object();
      entry["step"] = point.step;
      entry["suite_result"] = ResultToJson(point.result);
      list.push_back(std::move(entry));
    }
    models[model] = std::move(list);
  }
  out["series"] = std::move(models);
  out["warnings"] = series.warnings;
  return out;
}

int SeriesCommand(const std::string& suite_path, const std::string& scores_dir,
                  const std::string& svg_path, const GlobalFlags& flags,
                  std::ostream& out, std::ostream& err) {
  const Settings settings = ResolveSettings(flags, "json");
  RequireFormat(settings.format, {"json", "csv", "svg"});
  if (flags.out_path.empty()) throw InputError("series requires --out PATH");
  const SuiteFile suite = ReadSuiteFile(suite_path);
  if (!fs::is_directory(scores_dir)) {
    throw InputError("'" + scores_dir + "' is not a directory");
  }
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(scores_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end());
  std::vector<ScoreFile> files;
  for (const auto& path : paths) files.push_back(ReadScoresFile(path));
  files = WithBaseNames(std::move(files));

  const Series series =
      BuildSeries(suite.tests, files, Bootstrap(settings), settings.threads);
  for (const auto& warning : series.warnings) err << "warning: " << warning << "\n";

  std::vector<std::string> inputs{suite_path};
  for (const auto& path : paths) inputs.push_back(path.string());
  const Json document = SeriesToJson(series, Provenance("series", settings, inputs));

  fs::path json_path = flags.out_path;
  fs::path csv_path = flags.out_path;
  if (settings.format == "csv") {
    json_path.replace_extension(".json");
  } else {
    csv_path.replace_extension(".csv");
  }
  if (settings.format == "svg") {
    WriteTextFile(flags.out_path, RenderSeriesSvg(series));
  } else {
    WriteTextFile(json_path, document.dump(2) + "\n");
    WriteTextFile(csv_path, RenderSeriesCsv(series));
  }
  if (!svg_path.empty()) WriteTextFile(svg_path, RenderSeriesSvg(series));

  std::size_t n_points = 0;
  for (const auto& [model, points] : series.per_model) n_points += points.size();
  out << "series: " << series.per_model.size() << " model(s), " << n_points
      << " point(s)\n";
  out << RenderSeriesCsv(series);
  return kExitOk;
}

// --- report ----------------------------------------------------------------

int ReportCommand(const std::vector<std::string>& result_paths,
                  const GlobalFlags& flags, std::ostream& out) {
  const Settings settings = ResolveSettings(flags, "table");
  RequireFormat(settings.format, {"table", "json", "csv", "svg"});
  std::vector<SuiteResult> results;
  for (const auto& path : result_paths) {
    for (auto& result : ReadResultsFile(path).results) {
      results.push_back(std::move(result));
    }
  }
  std::string text;
  if (settings.format == "json") {
    text = ResultsToJson(results, Provenance("report", settings, result_paths))
               .dump(2) +
           "\n";
  } else if (settings.format == "csv") {
    text = RenderCsv(results);
  } else if (settings.format == "svg") {
    text = RenderBarSvg(results);
  } else {
    text = RenderTable(results);
  }
  Emit(flags.out_path, text, out);
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Near-negative distinction test suites: build, score-check, "
               "administer, verify",
               "nnd"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  GlobalFlags flags;
  app.add_option("--config", flags.config_path, "JSON config file")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", flags.seed,
                 "Bootstrap seed; confidence intervals are only computed "
                 "when a seed is given");
  app.add_option("--resamples", flags.n_resamples,
                 "Bootstrap resamples (default 1000)");
  app.add_option("--threads", flags.threads, "Worker threads for administering");
  app.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv", "svg"}));
  app.add_option("--out", flags.out_path, "Output path");

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Compile annotations into a suite");
  build_cmd->add_option("kind", build.kind,
                        "quiz_design | challenge300 | summeval | frank | generic")
      ->required();
  build_cmd->add_option("input", build.input, "Annotation file")
      ->required()
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--mapping", build.mapping, "Mapping config (generic)")
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--category-map", build.category_map,
                        "Category map (challenge300)")
      ->check(CLI::ExistingFile);

  std::string suite_path;
  std::vector<std::string> score_paths;
  auto* check_cmd =
      app.add_subcommand("check-scores", "Validate score files against a suite");
  check_cmd->add_option("suite", suite_path, "Suite file")
      ->required()
      ->check(CLI::ExistingFile);
  check_cmd->add_option("scores", score_paths, "Score files")
      ->required()
      ->check(CLI::ExistingFile);

  AdministerArgs administer;
  auto* administer_cmd =
      app.add_subcommand("administer", "Administer a suite and report pass rates");
  administer_cmd->add_option("suite", administer.suite, "Suite file")
      ->required()
      ->check(CLI::ExistingFile);
  administer_cmd->add_option("scores", administer.scores, "Score files")
      ->required()
      ->check(CLI::ExistingFile);
  administer_cmd->add_option("--csv", administer.csv_path, "Also write CSV here");
  administer_cmd->add_option("--svg", administer.svg_path,
                             "Also write an SVG bar chart here");

  std::vector<std::string> result_paths;
  std::string human_path;
  bool per_category = false;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Rank and gap correlation of pass rates with human scores");
  verify_cmd->add_option("results", result_paths, "Result files")
      ->required()
      ->check(CLI::ExistingFile);
  verify_cmd->add_option("--human", human_path, "Human scores JSON")
      ->required()
      ->check(CLI::ExistingFile);
  verify_cmd->add_flag("--per-category", per_category,
                       "Also verify each category and report a macro average");

  std::string scores_dir;
  std::string series_svg;
  auto* series_cmd =
      app.add_subcommand("series", "Pass rates across training checkpoints");
  series_cmd->add_option("suite", suite_path, "Suite file")
      ->required()
      ->check(CLI::ExistingFile);
  series_cmd->add_option("scores_dir", scores_dir,
                         "Directory of per-checkpoint .jsonl score files")
      ->required();
  series_cmd->add_option("--svg", series_svg, "Also write an SVG line chart");

  std::vector<std::string> report_paths;
  auto* report_cmd = app.add_subcommand("report", "Render result files");
  report_cmd->add_option("results", report_paths, "Result files")
      ->required()
      ->check(CLI::ExistingFile);

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1),
                                     args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*build_cmd) return Build(build, flags, out, err);
    if (*check_cmd) return CheckScoresCommand(suite_path, score_paths, flags, out);
    if (*administer_cmd) return AdministerCommand(administer, flags, out, err);
    if (*verify_cmd) {
      return VerifyCommand(result_paths, human_path, per_category, flags, out);
    }
    if (*series_cmd) {
      return SeriesCommand(suite_path, scores_dir, series_svg, flags, out, err);
    }
    if (*report_cmd) return ReportCommand(report_paths, flags, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kValidation ? kExitValidationFailure
                                              : kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace nnd::cli
