#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hexbrace/augment.hpp"
#include "hexbrace/diagnostics.hpp"
#include "hexbrace/ears.hpp"
#include "hexbrace/graph.hpp"
#include "hexbrace/matching.hpp"

namespace hexbrace {

// Two Q-edges standing for one path of P(G_i), with their supporting edges.
struct Projection {
  GPath path;
  std::array<Edge, 2> edges;
  Edge support_a;  // inside the square of path.a()
  Edge support_b;  // inside the square of path.b()

  Edge support_at(Vertex end) const { return end == path.a() ? support_a : support_b; }
};

// Square v is squares[v] = {v0, v1, v2, v3} with edges v_j v_{j+1}.
struct EarSquareGraph {
  LabeledGraph graph;
  std::map<Vertex, std::array<Vertex, 4>> squares;
  std::vector<Projection> projections;

  const Projection* find(const GPath& p) const;
  // The square of G-vertex v that contains Q-vertex q, if any.
  std::optional<Vertex> owner(Vertex q) const;
  // Applies an injective relabelling to every Q label.
  EarSquareGraph relabeled(const std::map<Vertex, Vertex>& map) const;
};

bool is_square_edge(const std::array<Vertex, 4>& s, const Edge& e);

// Every clause of the ear square graph definition plus the square degree
// pattern. Clause tags: "1", "2(a)", "2(b)", "2(c)", "edges", "bipartite",
// "degree".
Diagnostics check_ear_square_graph(const EarSquareGraph& q, const LabeledGraph& gi,
                                   const Matching& m);

// Square graph of a cubic g: the checks above with G_i = g, plus "ladder":
// the components of q minus the M-projections are ladders on 4|C| vertices,
// one per cycle C of g - M, holding exactly the squares of C.
Diagnostics check_square_graph(const EarSquareGraph& q, const LabeledGraph& g, const Matching& m);

struct EarStageResult {
  EarSquareGraph q;
  std::vector<AugmentationStep> steps;
  int configuration = 0;  // 0 for the first stage
  std::string instance;   // "1", "1'", "2", "2'" for the first stage
};

// Q_1 from L8 on labels u_j = j, v_j = 4 + j with u = alpha_1, v = beta_1.
EarStageResult build_q1(const LabeledGraph& g, const Matching& m, const OddEarDecomposition& d);

// Configuration 1..9 of two projections. Throws Error("unreachable_case")
// for the overlap patterns that a simple Q cannot contain.
int classify_configuration(const EarSquareGraph& q, const Projection& p1, const Projection& p2);

// Adds the squares of ear.alpha() and ear.beta() to q_prev (a (G_{i-1}, M)
// ear square graph). New labels are drawn from next_label upwards.
EarStageResult extend_ear(const EarSquareGraph& q_prev, const LabeledGraph& g_prev, const Ear& ear,
                          const Matching& m, Vertex& next_label);

// Two new squares: square 1 subdivides the projection between supporting
// edges e_a and e_b, square 2 the one between e_c and e_d, and a new
// projection joins them. Square 1 uses slot q0q1 toward e_a, q2q3 toward e_b
// and q1q2 toward square 2; square 2 likewise toward e_c, e_d and square 1.
// Throws Error("pattern") when the two projections are not present.
struct BasicSquareResult {
  LabeledGraph graph;
  std::array<Vertex, 4> square1{};
  std::array<Vertex, 4> square2{};
  std::array<Edge, 4> distinguished{};  // e_a, e_b, e_c, e_d under the output labels
  std::vector<AugmentationStep> steps;
};
BasicSquareResult basic_square_construction(const LabeledGraph& q, const Edge& e_a, const Edge& e_b,
                                            const Edge& e_c, const Edge& e_d, Vertex& next_label);

}  // namespace hexbrace
