#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hexbrace/graph.hpp"

namespace hexbrace {

// Expansion of x to the path x1 - v - x2: N1 moves to x1, N2 to x2.
struct Expansion {
  Vertex x = 0;
  std::vector<Vertex> n1;
  std::vector<Vertex> n2;
  Vertex x1 = 0;
  Vertex v = 0;
  Vertex x2 = 0;

  friend bool operator==(const Expansion&, const Expansion&) = default;
};

enum class StepKind { kType1, kType2, kType3, kType4, kExpand };
const char* to_string(StepKind k);
StepKind parse_step_kind(const std::string& s);

struct AugmentationStep {
  StepKind kind = StepKind::kType1;
  Edge edge;         // Type1
  Expansion first;   // Expand, Type2, Type3/4
  Vertex w = 0;      // Type2
  Expansion second;  // Type3/4

  static AugmentationStep type1(Vertex a, Vertex b);
  static AugmentationStep type2(Expansion e, Vertex w);
  static AugmentationStep expand(Expansion e);

  friend bool operator==(const AugmentationStep&, const AugmentationStep&) = default;
};

// Base of a trace: a named base graph (e.g. "L8") optionally relabelled
// (vertex i of the named graph becomes labels[i]), or an inline graph.
struct TraceBase {
  std::string name;
  std::vector<Vertex> labels;
  LabeledGraph inline_graph;

  LabeledGraph graph() const;
};

struct AugmentationTrace {
  TraceBase base;
  std::vector<AugmentationStep> steps;
};

// Each returns the new graph and throws Error on a violated precondition.
// Error kinds: "degree", "partition", "label_clash", "class", "duplicate_edge",
// "not_bipartite".
LabeledGraph expand(const LabeledGraph& g, const Expansion& e);
LabeledGraph augment_type1(const LabeledGraph& g, Vertex u, Vertex v);
LabeledGraph augment_type2(const LabeledGraph& g, const Expansion& e, Vertex w);
// Returns kType3 when x, y are non-adjacent and kType4 otherwise via `kind`.
LabeledGraph augment_type3_4(const LabeledGraph& g, const Expansion& ex, const Expansion& ey,
                             StepKind* kind = nullptr);

// Applies one step in place, validating its preconditions.
void apply_step(LabeledGraph& g, const AugmentationStep& step);

struct ReplayReport {
  LabeledGraph graph;
  std::vector<std::string> log;  // one line per step
};

// Throws Error("invalid_step") naming the 1-based position and the reason.
// `observer` (optional) sees the graph after every step.
ReplayReport replay_trace(
    const AugmentationTrace& t,
    const std::function<void(std::size_t, const LabeledGraph&)>& observer = {});

}  // namespace hexbrace
