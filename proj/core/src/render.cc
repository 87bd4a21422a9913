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

#include "nnd/render.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "nnd/io.h"

namespace nnd {
namespace {

constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759",
                                    "#76b7b2", "#59a14f", "#edc948",
                                    "#b07aa1", "#ff9da7", "#9c755f",
                                    "#bab0ac"};
constexpr std::size_t kPaletteSize = std::size(kPalette);

struct Column {
  std::string title;
  // Empty for the overall column.
  std::string key;
  bool attribute = false;
};

// Overall, then categories, then attributes whose names are not already
// category columns.
std::vector<Column> Columns(const std::vector<SuiteResult>& results) {
  std::set<std::string> categories;
  std::set<std::string> attributes;
  for (const auto& result : results) {
    for (const auto& [key, cell] : result.per_category) categories.insert(key);
    for (const auto& [key, cell] : result.per_attribute) attributes.insert(key);
  }
  std::vector<Column> columns{{"Overall", "", false}};
  for (const auto& key : categories) columns.push_back({key, key, false});
  for (const auto& key : attributes) {
    if (!categories.contains(key)) columns.push_back({key, key, true});
  }
  return columns;
}

const RateCell* Lookup(const SuiteResult& result, const Column& column) {
  const auto& cells = column.attribute ? result.per_attribute
                                       : result.per_category;
  auto it = cells.find(column.key);
  return it == cells.end() ? nullptr : &it->second;
}

std::optional<double> Rate(const SuiteResult& result, const Column& column) {
  if (column.key.empty()) return result.overall_pass_rate;
  const RateCell* cell = Lookup(result, column);
  if (cell == nullptr) return std::nullopt;
  return cell->pass_rate;
}

std::string Number(double value) { return Json(value).dump(); }

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string XmlEscape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string Fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

std::string PadLeft(const std::string& text, std::size_t width) {
  return text.size() >= width ? text : std::string(width - text.size(), ' ') + text;
}

std::string PadRight(const std::string& text, std::size_t width) {
  return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
}

}  // namespace

std::string FormatPercent(double rate) { return Fixed(100.0 * rate, 1); }

std::string RenderTable(const std::vector<SuiteResult>& results) {
  const auto columns = Columns(results);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"Model", "Tests"};
  for (const auto& column : columns) header.push_back(column.title);
  rows.push_back(header);
  for (const auto& result : results) {
    std::vector<std::string> row{result.model_id,
                                 std::to_string(result.n_tests)};
    for (const auto& column : columns) {
      auto rate = Rate(result, column);
      row.push_back(rate ? FormatPercent(*rate) : "-");
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i > 0) out << "  ";
      out << (i == 0 ? PadRight(rows[r][i], widths[i])
                     : PadLeft(rows[r][i], widths[i]));
    }
    out << "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t w : widths) total += w;
      out << std::string(total + 2 * (widths.size() - 1), '-') << "\n";
    }
  }
  return out.str();
}

std::string RenderCsv(const std::vector<SuiteResult>& results) {
  const auto columns = Columns(results);
  std::ostringstream out;
  out << "model_id,n_tests,n_passed,n_unscored,overall_pass_rate";
  for (std::size_t i = 1; i < columns.size(); ++i) {
    const std::string prefix =
        (columns[i].attribute ? "attribute:" : "category:") + columns[i].key;
    out << "," << CsvField(prefix + ":n_tests") << ","
        << CsvField(prefix + ":pass_rate");
  }
  out << "\n";
  for (const auto& result : results) {
    out << CsvField(result.model_id) << "," << result.n_tests << ","
        << result.n_passed << "," << result.n_unscored << ","
        << Number(result.overall_pass_rate);
    for (std::size_t i = 1; i < columns.size(); ++i) {
      const RateCell* cell = Lookup(result, columns[i]);
      if (cell == nullptr) {
        out << ",,";
      } else {
        out << "," << cell->n_tests << "," << Number(cell->pass_rate);
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string RenderBarSvg(const std::vector<SuiteResult>& results) {
  const auto columns = Columns(results);
  const int bar = 18;
  const int gap = 24;
  const int plot_height = 240;
  const int left = 50;
  const int top = 20;
  const int group_width =
      static_cast<int>(std::max<std::size_t>(1, results.size())) * bar + gap;
  const int width = left + static_cast<int>(columns.size()) * group_width + 160;
  const int height = top + plot_height + 60;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\" "
      << "font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int pct = 0; pct <= 100; pct += 25) {
    const int y = top + plot_height - pct * plot_height / 100;
    out << "<line x1=\"" << left << "\" y1=\"" << y << "\" x2=\""
        << left + static_cast<int>(columns.size()) * group_width << "\" y2=\""
        << y << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << left - 6 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\">" << pct << "%</text>\n";
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const int x0 = left + static_cast<int>(c) * group_width + gap / 2;
    for (std::size_t m = 0; m < results.size(); ++m) {
      auto rate = Rate(results[m], columns[c]);
      if (!rate) continue;
      const double h = *rate * plot_height;
      const int x = x0 + static_cast<int>(m) * bar;
      out << "<rect x=\"" << x << "\" y=\"" << Fixed(top + plot_height - h, 2)
          << "\" width=\"" << bar - 2 << "\" height=\"" << Fixed(h, 2)
          << "\" fill=\"" << kPalette[m % kPaletteSize] << "\"><title>"
          << XmlEscape(results[m].model_id + " / " + columns[c].title + ": " +
                       FormatPercent(*rate) + "%")
          << "</title></rect>\n";
    }
    out << "<text x=\""
        << x0 + static_cast<int>(results.size()) * bar / 2 << "\" y=\""
        << top + plot_height + 16 << "\" text-anchor=\"middle\">"
        << XmlEscape(columns[c].title) << "</text>\n";
  }
  const int legend_x = left + static_cast<int>(columns.size()) * group_width + 10;
  for (std::size_t m = 0; m < results.size(); ++m) {
    const int y = top + static_cast<int>(m) * 16;
    out << "<rect x=\"" << legend_x << "\" y=\"" << y << "\" width=\"10\" "
        << "height=\"10\" fill=\"" << kPalette[m % kPaletteSize] << "\"/>\n";
    out << "<text x=\"" << legend_x + 14 << "\" y=\"" << y + 9 << "\">"
        << XmlEscape(results[m].model_id) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string RenderSeriesCsv(const Series& series) {
  std::vector<SuiteResult> all;
  for (const auto& [model, points] : series.per_model) {
    for (const auto& point : points) all.push_back(point.result);
  }
  const auto columns = Columns(all);
  std::ostringstream out;
  out << "model_id,step,n_tests,overall_pass_rate";
  for (std::size_t i = 1; i < columns.size(); ++i) {
    out << "," << CsvField(columns[i].key);
  }
  out << "\n";
  for (const auto& [model, points] : series.per_model) {
    for (const auto& point : points) {
      out << CsvField(model) << "," << point.step << ","
          << point.result.n_tests << ","
          << Number(point.result.overall_pass_rate);
      for (std::size_t i = 1; i < columns.size(); ++i) {
        auto rate = Rate(point.result, columns[i]);
        out << "," << (rate ? Number(*rate) : "");
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string RenderSeriesSvg(const Series& series) {
  std::vector<SuiteResult> all;
  std::int64_t min_step = 0;
  std::int64_t max_step = 0;
  bool first = true;
  for (const auto& [model, points] : series.per_model) {
    for (const auto& point : points) {
      all.push_back(point.result);
      min_step = first ? point.step : std::min(min_step, point.step);
      max_step = first ? point.step : std::max(max_step, point.step);
      first = false;
    }
  }
  const auto columns = Columns(all);
  const int left = 50;
  const int top = 20;
  const int plot_width = 480;
  const int plot_height = 240;
  const int width = left + plot_width + 220;
  const int height = top + plot_height + 50;
  const double span =
      max_step > min_step ? static_cast<double>(max_step - min_step) : 1.0;
  auto x_of = [&](std::int64_t step) {
    return left + plot_width * static_cast<double>(step - min_step) / span;
  };
  auto y_of = [&](double rate) { return top + plot_height * (1.0 - rate); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\" "
      << "font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int pct = 0; pct <= 100; pct += 25) {
    const double y = y_of(pct / 100.0);
    out << "<line x1=\"" << left << "\" y1=\"" << Fixed(y, 2) << "\" x2=\""
        << left + plot_width << "\" y2=\"" << Fixed(y, 2)
        << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << left - 6 << "\" y=\"" << Fixed(y + 4, 2)
        << "\" text-anchor=\"end\">" << pct << "%</text>\n";
  }
  out << "<text x=\"" << left << "\" y=\"" << top + plot_height + 16 << "\">"
      << min_step << "</text>\n";
  out << "<text x=\"" << left + plot_width << "\" y=\"" << top + plot_height + 16
      << "\" text-anchor=\"end\">" << max_step << "</text>\n";
  std::size_t line_index = 0;
  for (const auto& [model, points] : series.per_model) {
    for (const auto& column : columns) {
      std::string path;
      for (const auto& point : points) {
        auto rate = Rate(point.result, column);
        if (!rate) continue;
        path += (path.empty() ? "M" : " L") + Fixed(x_of(point.step), 2) + " " +
                Fixed(y_of(*rate), 2);
      }
      if (path.empty()) continue;
      const char* color = kPalette[line_index % kPaletteSize];
      out << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"2\"/>\n";
      const int y = top + static_cast<int>(line_index) * 16;
      out << "<rect x=\"" << left + plot_width + 10 << "\" y=\"" << y
          << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>\n";
      out << "<text x=\"" << left + plot_width + 24 << "\" y=\"" << y + 9
          << "\">" << XmlEscape(model + " / " + column.title) << "</text>\n";
      ++line_index;
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string RenderVerification(const VerificationReport& report) {
  std::ostringstream out;
  out << "models (" << report.models.size() << "):";
  for (const auto& model : report.models) out << " " << model;
  out << "\n";
  out << "rank tau: "
      << (report.rank_tau.value ? Fixed(*report.rank_tau.value, 3)
                                : std::string("degenerate"))
      << "\n";
  out << "gap r:    "
      << (report.gap_r.value ? Fixed(*report.gap_r.value, 3)
                             : std::string("degenerate"))
      << " (" << report.n_pairs << " pairs)\n";
  return out.str();
}

}  // namespace nnd
