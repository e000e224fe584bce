// Copyright 2026 The LAFF Authors
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

// Text output: CSV tables with 10 significant digits and a minimal SVG
// line-plot writer.

#ifndef LAFF_CORE_IO_H_
#define LAFF_CORE_IO_H_

#include <ostream>
#include <string>
#include <vector>

#include "laff/engine.h"
#include "laff/evaluation.h"

namespace laff {

// printf("%.10g").
std::string FormatDouble(double x);

// Columns t,a1,a2,y1,y2,x,r1,r2,e1,e2 (e = active LAFF expert or -1).
void WriteTraceCsv(const MatchTrace& trace, std::ostream& out);

// Columns t,avg_regret; one row per step.
void WriteRegretCsv(const RegretCurve& curve, std::ostream& out);

// Columns i,j,m1,m2 with algorithm names.
void WriteLearningGameCsv(const LearningGameMatrix& m, std::ostream& out);

// Columns generation,<name>...
void WritePopulationCsv(const std::vector<std::vector<double>>& history,
                        const std::vector<std::string>& names,
                        std::ostream& out);

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// One polyline per series on shared axes; long series are thinned to at most
// `max_points` points.
void WriteSvgPlot(const std::vector<SvgSeries>& series,
                  const std::string& title, std::ostream& out,
                  int max_points = 2000);

}  // namespace laff

#endif  // LAFF_CORE_IO_H_
