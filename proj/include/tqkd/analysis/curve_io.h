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

#ifndef TQKD_ANALYSIS_CURVE_IO_H_
#define TQKD_ANALYSIS_CURVE_IO_H_

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tqkd/analysis/info_bounds.h"

namespace tqkd::analysis {

// Curve files: header `mu,eta,t,i_e,is_critical`, one row per CurvePoint, all
// reals printed with 9 significant digits ("%.9g"), is_critical as 0/1.
inline constexpr std::string_view kCurveHeader = "mu,eta,t,i_e,is_critical";
// Annotation files: one row per eta with mu* and I_E at mu*.
inline constexpr std::string_view kAnnotationHeader = "eta,t,mu_star,i_e_star";

struct Annotation {
  double eta = 0.0;
  double t = 0.0;
  double mu_star = 0.0;
  double i_e_star = 0.0;
};

class CsvParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string FormatCurvesCsv(std::span<const CurvePoint> points);
std::vector<CurvePoint> ParseCurvesCsv(std::string_view text);

std::vector<Annotation> AnnotateCurves(std::span<const double> etas, double t,
                                       double tol);
std::string FormatAnnotationsCsv(std::span<const Annotation> rows);
std::vector<Annotation> ParseAnnotationsCsv(std::string_view text);

// "curves_t0.7.csv" / "annotations_t0.7.csv".
std::string CurveFileName(double t);
std::string AnnotationFileName(double t);

}  // namespace tqkd::analysis

#endif  // TQKD_ANALYSIS_CURVE_IO_H_
