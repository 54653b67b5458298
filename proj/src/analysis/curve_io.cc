// Copyright 2026 The tqkd Authors
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

#include "tqkd/analysis/curve_io.h"

#include <charconv>
#include <cstdio>

namespace tqkd::analysis {
namespace {

std::string G9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string ShortT(double t) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), t);
  return std::string(buf, ptr);
}

// Splits CSV text into rows of fields, checking the header and column count.
std::vector<std::vector<std::string_view>> ReadRows(std::string_view text,
                                                    std::string_view header,
                                                    std::size_t columns) {
  std::vector<std::vector<std::string_view>> rows;
  std::size_t pos = 0;
  bool first = true;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (first) {
      if (line != header) throw CsvParseError("unexpected CSV header");
      first = false;
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != columns) {
      throw CsvParseError("line " + std::to_string(line_no) + ": expected " +
                          std::to_string(columns) + " columns");
    }
    rows.push_back(std::move(fields));
  }
  if (first) throw CsvParseError("empty CSV");
  return rows;
}

double Number(std::string_view field) {
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() ||
      field.empty()) {
    throw CsvParseError("bad number '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::string FormatCurvesCsv(std::span<const CurvePoint> points) {
  std::string out(kCurveHeader);
  out += '\n';
  for (const CurvePoint& p : points) {
    out += G9(p.mu) + ',' + G9(p.eta) + ',' + G9(p.t) + ',' + G9(p.i_e) + ',' +
           (p.is_critical ? "1" : "0") + '\n';
  }
  return out;
}

std::vector<CurvePoint> ParseCurvesCsv(std::string_view text) {
  std::vector<CurvePoint> points;
  for (const auto& f : ReadRows(text, kCurveHeader, 5)) {
    if (f[4] != "0" && f[4] != "1") throw CsvParseError("bad is_critical");
    points.push_back(
        {Number(f[0]), Number(f[1]), Number(f[2]), Number(f[3]), f[4] == "1"});
  }
  return points;
}

std::vector<Annotation> AnnotateCurves(std::span<const double> etas, double t,
                                       double tol) {
  std::vector<Annotation> rows;
  rows.reserve(etas.size());
  for (const double eta : etas) {
    const double mu_star = CriticalMu(eta, t);
    rows.push_back({eta, t, mu_star, EveInfo({mu_star, eta, t}, tol).i_e});
  }
  return rows;
}

std::string FormatAnnotationsCsv(std::span<const Annotation> rows) {
  std::string out(kAnnotationHeader);
  out += '\n';
  for (const Annotation& a : rows) {
    out += G9(a.eta) + ',' + G9(a.t) + ',' + G9(a.mu_star) + ',' +
           G9(a.i_e_star) + '\n';
  }
  return out;
}

std::vector<Annotation> ParseAnnotationsCsv(std::string_view text) {
  std::vector<Annotation> rows;
  for (const auto& f : ReadRows(text, kAnnotationHeader, 4)) {
    rows.push_back({Number(f[0]), Number(f[1]), Number(f[2]), Number(f[3])});
  }
  return rows;
}

std::string CurveFileName(double t) { return "curves_t" + ShortT(t) + ".csv"; }

std::string AnnotationFileName(double t) {
  return "annotations_t" + ShortT(t) + ".csv";
}

}  // namespace tqkd::analysis
