#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hexbrace/diagnostics.hpp"
#include "hexbrace/graph.hpp"

namespace hexbrace {

enum class EdgeColor { kRed, kBlue, kWhite };
const char* to_string(EdgeColor c);

// For every source vertex v, its neighbours ordered by index: order[v][i] is
// the neighbour u with i_{v(u)} = i.
using IndexAssignment = std::map<Vertex, std::array<Vertex, 3>>;

// Rank of u in v's sorted neighbour list.
IndexAssignment canonical_index_assignment(const LabeledGraph& g);

// Vertex v_i of hexagon h_v carries label 6v + i; X holds even i, Y odd i.
constexpr Vertex hex_label(Vertex v, int i) { return 6 * v + static_cast<Vertex>(i); }
constexpr Vertex hex_source(Vertex label) { return label / 6; }
constexpr int hex_index(Vertex label) { return static_cast<int>(label % 6); }
constexpr bool hex_in_x(Vertex label) { return label % 2 == 0; }

struct HexagonGraph {
  LabeledGraph source;
  LabeledGraph graph;
  IndexAssignment index;
  std::map<Edge, EdgeColor> color;
  // G-edge -> {e_uv, e'_uv}; e_uv is the white edge at u_{i_u(v)} for u < v.
  std::map<Edge, std::array<Edge, 2>> white_of;
  std::map<Edge, Edge> source_edge;  // white edge -> G-edge
  std::vector<Vertex> source_order;  // sorted source vertices (bit order)

  int index_of(Vertex v, Vertex u) const;
  std::array<Vertex, 6> hexagon(Vertex v) const;
  std::vector<Edge> edges_of_color(EdgeColor c) const;
};

// Throws Error("not_cubic"/"disconnected") on invalid input.
HexagonGraph build_hexagon_graph(const LabeledGraph& g);
HexagonGraph build_hexagon_graph(const LabeledGraph& g, const IndexAssignment& ia);

// Independent structural checker: hexagon edge sets, index distinctness,
// white parity rule, 4-regularity, bipartition sizes, perfect red/white sets.
Diagnostics check_hexagon_graph(const HexagonGraph& h);

// bits[k] belongs to h.source_order[k]. false selects {v0v1, v2v3, v4v5},
// true selects {v1v2, v3v4, v5v0}.
struct BlueMatching {
  std::vector<bool> bits;
  friend auto operator<=>(const BlueMatching&, const BlueMatching&) = default;
};

std::set<Edge> blue_matching_edges(const HexagonGraph& h, const BlueMatching& m);
// Partner of hexagon position i under bit b.
constexpr int blue_partner(int i, bool b) {
  if (!b) return i ^ 1;
  return (i % 2 == 1) ? (i + 1) % 6 : (i + 5) % 6;
}

// All 2^n matchings in lexicographic bit order (bits[0] most significant).
std::vector<BlueMatching> blue_matchings(const HexagonGraph& h);
BlueMatching blue_matching_from_index(const HexagonGraph& h, std::uint64_t code);

// Cyclic neighbour order at every source vertex; pi_v maps the edge to
// order[v][k] onto the edge to order[v][k+1].
struct RotationSystem {
  std::map<Vertex, std::vector<Vertex>> order;
  Vertex next(Vertex v, Vertex from) const;
  // Rotates each cycle to start at its smallest neighbour.
  RotationSystem normalized() const;
  friend bool operator==(const RotationSystem& a, const RotationSystem& b) {
    return a.normalized().order == b.normalized().order;
  }
};

RotationSystem matching_to_rotation(const HexagonGraph& h, const BlueMatching& m);
// Throws Error("invalid_rotation") when some pi_v is not a 3-cycle on the
// incident edges.
BlueMatching rotation_to_matching(const HexagonGraph& h, const RotationSystem& r);
// Every rotation system of a cubic graph (2^n), in bit order.
std::vector<RotationSystem> all_rotation_systems(const LabeledGraph& g);

struct ClosedWalk {
  std::vector<Vertex> vertices;  // vertices[k] -> vertices[k+1 mod len]
  std::vector<Edge> edges;       // edges[k] joins vertices[k], vertices[k+1]
};

struct FaceSet {
  std::vector<ClosedWalk> faces;
};

// Throws Error("invalid_rotation") for malformed input.
FaceSet trace_faces(const LabeledGraph& g, const RotationSystem& r);
// (2 - V + E - F) / 2; throws Error("parity") if not a non-negative integer.
int euler_genus(const LabeledGraph& g, const RotationSystem& r);
// True when every edge lies on two distinct faces.
bool has_no_dual_loop(const LabeledGraph& g, const RotationSystem& r);

// Cycles of M union W as vertex sequences. Each starts at its smallest label
// and steps first to that vertex's blue partner; cycles sorted by start.
std::vector<std::vector<Vertex>> mdw_cycles(const HexagonGraph& h,
                                            const BlueMatching& m);
ClosedWalk induced_face(const HexagonGraph& h, const std::vector<Vertex>& cycle);

// Edge-multiset key of a walk, for comparing face collections.
std::vector<Edge> edge_multiset(const ClosedWalk& w);

struct SafetyResult {
  bool safe = true;
  std::optional<Edge> red_edge;
  std::vector<Vertex> cycle;
};
SafetyResult is_safe(const HexagonGraph& h, const BlueMatching& m);

// Lexicographically smallest safe matching. Pruned depth-first search; with
// jobs > 1 the first bits are split across OpenMP workers and a min-reduce
// keeps the answer independent of the worker count.
std::optional<BlueMatching> find_safe_matching(const HexagonGraph& h, int jobs = 1);
// Plain enumeration in lexicographic order with is_safe.
std::optional<BlueMatching> find_safe_matching_reference(const HexagonGraph& h);

using Arc = std::pair<Vertex, Vertex>;
struct DcdcCertificate {
  std::vector<std::vector<Arc>> cycles;
};

// One directed closed walk per M-delta-W cycle. Each cycle is read in the
// direction that crosses its white edges from the Y end to the X end, which
// gives the two white edges of every G-edge opposite arcs.
// Throws Error("not_safe").
DcdcCertificate extract_dcdc(const HexagonGraph& h, const BlueMatching& m);
Diagnostics verify_dcdc(const LabeledGraph& g, const DcdcCertificate& cert);

}  // namespace hexbrace
