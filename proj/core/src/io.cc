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

#include "laff/io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace laff {

std::string FormatDouble(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

void WriteTraceCsv(const MatchTrace& trace, std::ostream& out) {
  out << "t,a1,a2,y1,y2,x,r1,r2,e1,e2\n";
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const StepRecord& s = trace.steps[i];
    out << s.t << ',' << s.a1 << ',' << s.a2 << ',' << s.y1 << ',' << s.y2
        << ',' << FormatDouble(s.x) << ',' << FormatDouble(s.r1) << ','
        << FormatDouble(s.r2) << ',' << trace.expert1[i] << ','
        << trace.expert2[i] << '\n';
  }
}

void WriteRegretCsv(const RegretCurve& curve, std::ostream& out) {
  out << "t,avg_regret\n";
  for (size_t t = 1; t <= curve.cumulative.size(); ++t) {
    out << t << ',' << FormatDouble(curve.AverageAt(static_cast<long>(t)))
        << '\n';
  }
}

void WriteLearningGameCsv(const LearningGameMatrix& m, std::ostream& out) {
  out << "i,j,m1,m2\n";
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      out << m.names[i] << ',' << m.names[j] << ',' << FormatDouble(m.m1(i, j))
          << ',' << FormatDouble(m.m2(i, j)) << '\n';
    }
  }
}

void WritePopulationCsv(const std::vector<std::vector<double>>& history,
                        const std::vector<std::string>& names,
                        std::ostream& out) {
  out << "generation";
  for (const std::string& n : names) out << ',' << n;
  out << '\n';
  for (size_t g = 0; g < history.size(); ++g) {
    out << g;
    for (double p : history[g]) out << ',' << FormatDouble(p);
    out << '\n';
  }
}

void WriteSvgPlot(const std::vector<SvgSeries>& series,
                  const std::string& title, std::ostream& out,
                  int max_points) {
  constexpr double kWidth = 640, kHeight = 400, kMargin = 40;
  constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                     "#ff7f0e", "#9467bd", "#8c564b",
                                     "#e377c2", "#7f7f7f", "#bcbd22",
                                     "#17becf", "#000000"};
  double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
  for (const SvgSeries& s : series) {
    for (double x : s.x) {
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
    }
    for (double y : s.y) {
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (!(x_hi > x_lo)) x_hi = x_lo + 1;
  if (!(y_hi > y_lo)) y_hi = y_lo + 1;
  auto px = [&](double x) {
    return kMargin + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin);
  };
  auto py = [&](double y) {
    return kHeight - kMargin -
           (y - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n";
  out << "<text x=\"" << kMargin << "\" y=\"20\">" << title << "</text>\n";
  out << "<text x=\"4\" y=\"" << kMargin << "\" font-size=\"10\">"
      << FormatDouble(y_hi) << "</text>\n";
  out << "<text x=\"4\" y=\"" << kHeight - kMargin << "\" font-size=\"10\">"
      << FormatDouble(y_lo) << "</text>\n";
  for (size_t k = 0; k < series.size(); ++k) {
    const SvgSeries& s = series[k];
    const size_t n = std::min(s.x.size(), s.y.size());
    const size_t stride =
        std::max<size_t>(1, n / static_cast<size_t>(std::max(1, max_points)));
    const char* color = kColors[k % std::size(kColors)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (size_t i = 0; i < n; i += stride) {
      out << FormatDouble(px(s.x[i])) << ',' << FormatDouble(py(s.y[i])) << ' ';
    }
    if (n > 0 && (n - 1) % stride != 0) {
      out << FormatDouble(px(s.x[n - 1])) << ','
          << FormatDouble(py(s.y[n - 1]));
    }
    out << "\"/>\n";
    out << "<text x=\"" << kWidth - 150 << "\" y=\"" << 20 + 14 * (k + 1)
        << "\" font-size=\"11\" fill=\"" << color << "\">" << s.label
        << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace laff
