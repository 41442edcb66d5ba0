#pragma once

#include <map>
#include <string>
#include <vector>

#include "hexbrace/augment.hpp"
#include "hexbrace/ear_square.hpp"
#include "hexbrace/ears.hpp"
#include "hexbrace/graph.hpp"
#include "hexbrace/matching.hpp"

namespace hexbrace {

// The hexagon a double augmentation leaves behind for one G-vertex: its six
// labels and, per G-neighbour, the red pair carrying the white edges to it.
struct HexagonPiece {
  Vertex source = 0;
  std::vector<Vertex> labels;
  std::map<Vertex, Edge> red_by_neighbor;
};

struct DoubleAugmentation {
  char configuration = 'a';  // 'a', 'b' or 'c' after the optional u/v swap
  bool swapped = false;      // true when u and v exchanged roles
  std::vector<AugmentationStep> steps;
  HexagonPiece hu, hv;
};

// Five-step simple-augmentation sequence on the matched pair (s_u, s_v) of a
// square graph. `current` is the graph the steps apply to: q.graph after any
// earlier double augmentations on other pairs. Throws Error("configuration")
// and Error("degree") on violated preconditions.
DoubleAugmentation double_augmentation(const EarSquareGraph& q, const LabeledGraph& current, Vertex u,
                                       Vertex v, Vertex& next_label);

struct EarReport {
  std::size_t ear = 0;  // 1-based index of the ear
  int configuration = 0;
  std::string instance;
  std::size_t steps = 0;
};

struct PipelineReport {
  Matching matching;
  OddEarDecomposition decomposition;
  std::vector<EarReport> ears;
  // stages[i] is Q_{i+1}; it is the graph after stage_end[i] trace steps.
  std::vector<EarSquareGraph> stages;
  std::vector<std::size_t> stage_end;
  std::size_t double_augmentations = 0;
  AugmentationTrace trace;
};

// L8 to the hexagon graph of g (canonical labels 6v + i) by simple
// augmentations. Throws Error("not_cubic"/"disconnected"/"bridged") for
// invalid input.
PipelineReport generate_hexagon_trace(const LabeledGraph& g);

// Replays the report's trace and re-checks every recorded stage and the final
// graph; empty diagnostics mean the pipeline output is consistent.
Diagnostics verify_pipeline(const LabeledGraph& g, const PipelineReport& r);

}  // namespace hexbrace
