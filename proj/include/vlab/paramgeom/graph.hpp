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

#ifndef VLAB_PARAMGEOM_GRAPH_HPP_
#define VLAB_PARAMGEOM_GRAPH_HPP_

#include <optional>
#include <string>
#include <vector>

#include "vlab/bestapprox/records.hpp"
#include "vlab/paramgeom/minima.hpp"
#include "vlab/paramgeom/trajectory.hpp"

namespace vlab {

enum class MinimaMode { kExact, kPool };

struct GraphOptions {
  MinimaMode mode = MinimaMode::kExact;
  double q_max = 0;  // 0: largest meeting point, at least 4
  double q0 = 1.0;
  double ratio = 1.25;
  MinimaOptions minima;
};

struct GraphSample {
  double q = 0;
  std::vector<RealEnclosure> values;  // L_1 .. L_{2n-1}, fewer if incomplete
  std::optional<RealEnclosure> sum;
  std::optional<RealEnclosure> margin;
  bool incomplete = false;
};

struct GraphData {
  int n = 2;
  std::string frame;
  MinimaMode mode = MinimaMode::kExact;
  std::vector<GraphPoint> points;
  std::vector<double> grid;
  std::vector<GraphSample> samples;
};

// Meeting points of consecutive records, k = 2 .. N.
std::vector<GraphPoint> CombinedGraphPoints(const SequenceData& seq);

// Geometric grid merged with every q_k and s_k up to q_max.
std::vector<double> SampleGrid(const std::vector<GraphPoint>& points,
                               double q_max, double q0, double ratio);

// Samples the successive minima of the combined graph over the grid. Needs
// n >= 2.
GraphData BuildGraph(const SequenceData& seq, const GraphOptions& options);

std::string MinimaModeName(MinimaMode mode);

// Columns q, L_1, ..., L_{2n-1}, sum, margin.
std::string FormatMinimaCsv(const GraphData& graph);
// Columns k, q, L_P: every record trajectory on the grid.
std::string FormatTrajectoryCsv(const SequenceData& seq, const GraphData& graph);
std::string FormatGraphJson(const SequenceData& seq, const GraphData& graph);
std::string RenderGraphSvg(const SequenceData& seq, const GraphData& graph);

}  // namespace vlab

#endif  // VLAB_PARAMGEOM_GRAPH_HPP_
