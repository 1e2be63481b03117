// Copyright 2026 The vlab Authors
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

#include "vlab/paramgeom/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "vlab/error.hpp"

namespace vlab {
namespace {

std::string Num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string Fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

nlohmann::ordered_json Ball(const RealEnclosure& x) {
  return {{"mid", x.MidString(20)}, {"rad", x.RadString(20)}};
}

}  // namespace

std::string MinimaModeName(MinimaMode mode) {
  return mode == MinimaMode::kExact ? "exact" : "pool";
}

std::vector<GraphPoint> CombinedGraphPoints(const SequenceData& seq) {
  std::vector<GraphPoint> out;
  for (std::size_t i = 1; i < seq.records.size(); ++i) {
    out.push_back(MeetingPoint(seq.records[i - 1], seq.records[i], seq.n));
  }
  return out;
}

std::vector<double> SampleGrid(const std::vector<GraphPoint>& points,
                               double q_max, double q0, double ratio) {
  std::vector<double> grid = GeometricGrid(q_max, q0, ratio);
  for (const auto& p : points) {
    for (double v : {p.q.mid(), p.s.mid()}) {
      if (v > 0 && v <= q_max) grid.push_back(v);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

GraphData BuildGraph(const SequenceData& seq, const GraphOptions& options) {
  if (seq.n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "the combined graph needs n >= 2");
  }
  if (seq.records.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no records to graph");
  }
  GraphData g;
  g.n = seq.n;
  g.mode = options.mode;
  g.frame = FrameLabel(seq);
  g.points = CombinedGraphPoints(seq);
  double q_max = options.q_max;
  if (q_max <= 0) {
    q_max = 4;
    for (const auto& p : g.points) q_max = std::max(q_max, p.q.mid());
  }
  g.grid = SampleGrid(g.points, q_max, options.q0, options.ratio);
  const RealSource source = seq.source();
  MinimaOptions minima = options.minima;
  minima.precision_bits = seq.precision_bits;
  for (double q : g.grid) {
    GraphSample s;
    s.q = q;
    if (options.mode == MinimaMode::kExact) {
      s.values = SuccessiveMinimaExact(source, seq.n, q, minima).values;
    } else {
      PoolResult pool = SuccessiveMinimaPool(seq, q);
      s.values = std::move(pool.values);
      s.incomplete = pool.incomplete;
    }
    if (!s.incomplete) {
      RealEnclosure sum(seq.precision_bits);
      for (const auto& v : s.values) sum += v;
      s.sum = sum;
      s.margin = MinkowskiMargin(s.values, seq.n);
    }
    g.samples.push_back(std::move(s));
  }
  return g;
}

std::string FormatMinimaCsv(const GraphData& graph) {
  const int d = 2 * graph.n - 1;
  std::ostringstream out;
  out << "q";
  for (int j = 1; j <= d; ++j) out << ",L_" << j;
  out << ",sum,margin\n";
  for (const auto& s : graph.samples) {
    out << Num(s.q);
    for (int j = 0; j < d; ++j) {
      out << ',';
      if (j < static_cast<int>(s.values.size())) out << Fixed(s.values[j].mid(), 10);
    }
    out << ',' << (s.sum ? Fixed(s.sum->mid(), 10) : "");
    out << ',' << (s.margin ? Fixed(s.margin->mid(), 10) : "") << '\n';
  }
  return out.str();
}

std::string FormatTrajectoryCsv(const SequenceData& seq, const GraphData& graph) {
  std::ostringstream out;
  out << "k,q,L_P\n";
  for (const auto& r : seq.records) {
    const Trajectory t = Trajectory::Of(r.poly, r.log_abs_value, seq.n);
    for (double q : graph.grid) {
      out << r.k << ',' << Num(q) << ',' << Fixed(t.Evaluate(q), 10) << '\n';
    }
  }
  return out.str();
}

std::string FormatGraphJson(const SequenceData& seq, const GraphData& graph) {
  nlohmann::ordered_json j;
  j["xi"] = seq.xi_spec.ToString();
  j["n"] = graph.n;
  j["frame"] = graph.frame;
  j["mode"] = MinimaModeName(graph.mode);
  j["minkowski_constant"] = Ball(MinkowskiConstant(graph.n, seq.precision_bits));
  auto points = nlohmann::ordered_json::array();
  for (const auto& p : graph.points) {
    points.push_back({{"k", p.k},
                      {"q", Ball(p.q)},
                      {"s", Ball(p.s)},
                      {"value", Ball(p.value)},
                      {"omega", Ball(p.omega)},
                      {"omega_flagged", p.omega_flagged}});
  }
  j["points"] = points;
  auto samples = nlohmann::ordered_json::array();
  for (const auto& s : graph.samples) {
    nlohmann::ordered_json row;
    row["q"] = Num(s.q);
    auto values = nlohmann::ordered_json::array();
    for (const auto& v : s.values) values.push_back(Ball(v));
    row["values"] = values;
    row["sum"] = s.sum ? Ball(*s.sum) : nlohmann::ordered_json(nullptr);
    row["margin"] = s.margin ? Ball(*s.margin) : nlohmann::ordered_json(nullptr);
    row["incomplete"] = s.incomplete;
    samples.push_back(row);
  }
  j["samples"] = samples;
  return j.dump(2) + "\n";
}

std::string RenderGraphSvg(const SequenceData& seq, const GraphData& graph) {
  constexpr double kWidth = 800, kHeight = 500, kPad = 50;
  const double q_hi = graph.grid.empty() ? 1.0 : graph.grid.back();
  double lo = 0, hi = 0;
  for (const auto& s : graph.samples) {
    for (const auto& v : s.values) {
      lo = std::min(lo, v.mid());
      hi = std::max(hi, v.mid());
    }
  }
  if (hi - lo < 1e-9) hi = lo + 1;
  auto px = [&](double q) { return kPad + (kWidth - 2 * kPad) * q / q_hi; };
  auto py = [&](double v) {
    return kHeight - kPad - (kHeight - 2 * kPad) * (v - lo) / (hi - lo);
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kPad << "\" y=\"24\" font-family=\"sans-serif\" "
         "font-size=\"14\">"
      << seq.xi_spec.ToString() << ", n=" << graph.n << ", "
      << MinimaModeName(graph.mode) << " minima, " << graph.frame << "</text>\n";
  out << "<line x1=\"" << px(0) << "\" y1=\"" << Fixed(py(0), 2) << "\" x2=\""
      << px(q_hi) << "\" y2=\"" << Fixed(py(0), 2)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (const auto& r : seq.records) {
    const Trajectory t = Trajectory::Of(r.poly, r.log_abs_value, graph.n);
    out << "<polyline fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"0.8\" points=\"";
    for (double q : graph.grid) {
      const double v = std::clamp(t.Evaluate(q), lo, hi);
      out << Fixed(px(q), 2) << ',' << Fixed(py(v), 2) << ' ';
    }
    out << "\"/>\n";
  }
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#e377c2"};
  const int d = 2 * graph.n - 1;
  for (int j = 0; j < d; ++j) {
    out << "<polyline fill=\"none\" stroke=\"" << kColors[j % 7]
        << "\" stroke-width=\"1.6\" points=\"";
    for (const auto& s : graph.samples) {
      if (j >= static_cast<int>(s.values.size())) continue;
      out << Fixed(px(s.q), 2) << ',' << Fixed(py(s.values[j].mid()), 2) << ' ';
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace vlab
