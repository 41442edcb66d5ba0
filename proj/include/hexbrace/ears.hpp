#pragma once

#include <optional>
#include <vector>

#include "hexbrace/diagnostics.hpp"
#include "hexbrace/graph.hpp"
#include "hexbrace/matching.hpp"

namespace hexbrace {

// An ear: path[0] = alpha, path.back() = beta, interior in between.
struct Ear {
  std::vector<Vertex> path;
  Vertex alpha() const { return path.front(); }
  Vertex beta() const { return path.back(); }
  std::size_t length() const { return path.size() - 1; }
};

struct OddEarDecomposition {
  std::vector<Vertex> g0;  // cycle, g0[k] ~ g0[k+1], closing edge back to g0[0]
  std::vector<Ear> ears;
};

// G0 is the shortest M-alternating cycle through the smallest vertex; each ear
// is the shortest M-alternating odd path leaving the current graph through
// non-M end edges, ties broken by smallest endpoint then lexicographic path.
// Throws Error("not_matching_covered") when no alternating cycle or ear
// exists, Error("not_perfect") when m is not a perfect matching of g.
OddEarDecomposition odd_ear_decomposition(const LabeledGraph& g, const Matching& m);

// Independent check of every decomposition and absoluteness condition.
Diagnostics verify_decomposition(const LabeledGraph& g, const Matching& m,
                                 const OddEarDecomposition& d);

// G_i: G0 plus the first i ears.
LabeledGraph stage_graph(const OddEarDecomposition& d, std::size_t i);

// A path between degree-3 vertices whose interior has degree 2. Stored from
// the smaller end; `vertices` includes both ends.
struct GPath {
  std::vector<Vertex> vertices;
  Vertex a() const { return vertices.front(); }
  Vertex b() const { return vertices.back(); }
  Vertex other_end(Vertex x) const { return x == a() ? b() : a(); }
  bool has_end(Vertex x) const { return x == a() || x == b(); }
  bool contains(Vertex x) const;
  // Edge of the path at end x.
  Edge end_edge(Vertex x) const;
  friend auto operator<=>(const GPath&, const GPath&) = default;
};

GPath make_path(std::vector<Vertex> vertices);

// All paths of P(G_i), sorted. Every vertex of degree 3 is an end of exactly
// three entries (counting multiplicity by end edge).
std::vector<GPath> graph_paths(const LabeledGraph& gi);

struct VertexPaths {
  Vertex v = 0;
  std::vector<Vertex> pseudo_neighbors;  // one per incident path
  std::vector<GPath> paths;              // the three paths at v
  GPath matching_path;                   // the one whose end edge at v is in M
};

// For every degree-3 vertex of gi.
std::vector<VertexPaths> matching_paths(const LabeledGraph& gi, const Matching& m);

// The three paths at v, each identified by its end edge at v.
std::vector<GPath> paths_at(const std::vector<GPath>& all, Vertex v);
std::optional<GPath> matching_path_of(const std::vector<GPath>& all, const Matching& m,
                                      Vertex v);

}  // namespace hexbrace
