// Copyright 2026 The Pathgen Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// CSV rendering of comparison reports.
//
// One row per candidate in canonical order, then a summary row repeating the
// selected candidate with its algorithm cell written as "selected:<ALG>".
// Ratios and scores carry four decimals with a dot separator regardless of
// locale. Cells of a failed candidate's criteria are left empty.

#ifndef PATHGEN_REPORT_HPP_
#define PATHGEN_REPORT_HPP_

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "pathgen/criteria.hpp"
#include "pathgen/error.hpp"
#include "pathgen/selection.hpp"

namespace pathgen {

inline constexpr std::string_view kCsvHeader =
    "model,algorithm,conversion,t_count,edges,edges_h,edges_m,uedges,uedges_h,"
    "uedges_m,nodes,unodes,er,e_h,e_m,ue_h,ue_m,opt_score,coverage_ok,selected";

inline constexpr std::size_t kCsvColumns = 20;
inline constexpr std::string_view kSummaryPrefix = "selected:";

inline std::string FormatFixed(double value, int decimals = 4) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                 std::chars_format::fixed, decimals);
  if (ec != std::errc()) return "nan";
  std::string text(buffer, end);
  if (text.find_first_not_of("-0.") == std::string::npos) {
    text.erase(0, text.find_first_not_of('-'));  // no "-0.0000"
  }
  return text;
}

inline std::string CsvEscape(std::string_view cell) {
  if (cell.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(cell);
  }
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// Cells 3..16 of a row: the fourteen criteria in report order.
inline std::vector<std::string> CriteriaCells(const CriteriaVector& v) {
  std::vector<std::string> cells;
  for (Criterion c : kAllCriteria) {
    if (IsMaximized(c) || c == Criterion::kEdgeRatio) {
      cells.push_back(FormatFixed(v.Value(c)));
    } else {
      cells.push_back(std::to_string(static_cast<std::int64_t>(v.Value(c))));
    }
  }
  return cells;
}

inline std::string CandidateRow(const ComparisonReport& report, std::size_t index,
                                 bool summary) {
  const CandidateResult& c = report.candidates[index];
  std::vector<std::string> cells;
  cells.push_back(CsvEscape(report.model_name));
  std::string algorithm(AlgorithmName(c.run.algorithm));
  cells.push_back(summary ? std::string(kSummaryPrefix) + algorithm : algorithm);
  cells.push_back(std::string(ConversionName(c.run.conversion)));
  if (c.criteria) {
    for (std::string& cell : CriteriaCells(*c.criteria)) cells.push_back(std::move(cell));
  } else {
    cells.insert(cells.end(), kCriterionCount, "");
  }
  cells.push_back(c.opt_score ? FormatFixed(*c.opt_score) : "");
  cells.push_back(c.ok() && c.verdict.satisfied ? "1" : "0");
  cells.push_back(index == report.selected ? "1" : "0");
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) row += ',';
    row += cells[i];
  }
  return row;
}

// Candidate and summary rows without the header.
inline std::string WriteCsvRows(const ComparisonReport& report) {
  std::string text;
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    text += CandidateRow(report, i, false) + "\n";
  }
  text += CandidateRow(report, report.selected, true) + "\n";
  return text;
}

inline std::string WriteCsv(const ComparisonReport& report) {
  return std::string(kCsvHeader) + "\n" + WriteCsvRows(report);
}

struct CsvRow {
  std::string model;
  std::string algorithm;  // without the summary prefix
  std::string conversion;
  std::optional<CriteriaVector> criteria;
  std::optional<double> opt_score;
  bool coverage_ok = false;
  bool selected = false;
  bool summary = false;
};

inline std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else {
      cells.back() += c;
    }
  }
  return cells;
}

namespace internal {

template <typename T>
T ParseNumber(const std::string& cell) {
  T value{};
  auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || end != cell.data() + cell.size()) {
    throw Error(ErrorCode::kMalformedDocument, "bad CSV number '" + cell + "'");
  }
  return value;
}

}  // namespace internal

// Parses text produced by WriteCsv. Ratios come back with four decimals.
inline std::vector<CsvRow> ParseCsv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    if (header) {
      if (line != kCsvHeader) {
        throw Error(ErrorCode::kMalformedDocument, "unexpected CSV header");
      }
      header = false;
      continue;
    }
    const std::vector<std::string> cells = SplitCsvLine(line);
    if (cells.size() != kCsvColumns) {
      throw Error(ErrorCode::kMalformedDocument, "CSV row with wrong column count");
    }
    CsvRow row;
    row.model = cells[0];
    row.algorithm = cells[1];
    if (row.algorithm.starts_with(kSummaryPrefix)) {
      row.summary = true;
      row.algorithm.erase(0, kSummaryPrefix.size());
    }
    row.conversion = cells[2];
    if (!cells[3].empty()) {
      CriteriaVector v;
      std::int64_t* counts[] = {&v.t_count,    &v.edges_total, &v.edges_high,
                                &v.edges_med,  &v.uedges,      &v.uedges_high,
                                &v.uedges_med, &v.nodes_total, &v.unodes};
      for (std::size_t i = 0; i < 9; ++i) {
        *counts[i] = internal::ParseNumber<std::int64_t>(cells[3 + i]);
      }
      double* ratios[] = {&v.er, &v.e_h, &v.e_m, &v.ue_h, &v.ue_m};
      for (std::size_t i = 0; i < 5; ++i) {
        *ratios[i] = internal::ParseNumber<double>(cells[12 + i]);
      }
      row.criteria = v;
    }
    if (!cells[17].empty()) row.opt_score = internal::ParseNumber<double>(cells[17]);
    row.coverage_ok = cells[18] == "1";
    row.selected = cells[19] == "1";
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pathgen

#endif  // PATHGEN_REPORT_HPP_
