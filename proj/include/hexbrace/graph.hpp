#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hexbrace {

using Vertex = std::uint32_t;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool shares_vertex(const Edge& e) const {
    return contains(e.u) || contains(e.v);
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// Base class for every error raised by the library. `kind` is a short stable
// tag suitable for tests and machine output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Undirected simple graph with stable labels. Vertices iterate in ascending
// label order; each neighbour list keeps insertion order.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  // Vertices 0..n-1, no edges.
  explicit LabeledGraph(std::size_t n);
  LabeledGraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  void add_vertex(Vertex v);
  void add_edge(Vertex u, Vertex v);
  void add_edge(const Edge& e) { add_edge(e.u, e.v); }
  void remove_edge(Vertex u, Vertex v);
  void remove_edge(const Edge& e) { remove_edge(e.u, e.v); }
  // Removes v and all incident edges.
  void remove_vertex(Vertex v);

  bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  const std::vector<Vertex>& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::vector<Vertex> vertices() const;
  std::vector<Edge> edges() const;  // sorted
  Vertex max_label() const;         // requires a non-empty graph
  bool empty() const { return adj_.empty(); }

  // Same vertex set and edge set; neighbour order is ignored.
  bool same_as(const LabeledGraph& other) const;

  // Subgraph on `keep` with every edge of this graph between kept vertices.
  LabeledGraph induced(const std::set<Vertex>& keep) const;
  // Graph with every label replaced through `map` (which must be injective
  // and cover every vertex).
  LabeledGraph relabeled(const std::map<Vertex, Vertex>& map) const;

  using const_iterator = std::map<Vertex, std::vector<Vertex>>::const_iterator;
  const_iterator begin() const { return adj_.begin(); }
  const_iterator end() const { return adj_.end(); }

 private:
  std::map<Vertex, std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

// Dense 0..n-1 view of a LabeledGraph, used by the inner loops.
struct DenseGraph {
  std::vector<Vertex> labels;               // index -> label
  std::map<Vertex, int> index;              // label -> index
  std::vector<std::vector<int>> adj;        // index neighbours, insertion order

  explicit DenseGraph(const LabeledGraph& g);
  int size() const { return static_cast<int>(labels.size()); }
};

// ---------------------------------------------------------------------------
// Structure queries.

struct CubicWitness {
  std::size_t n = 0;
  std::size_t m = 0;
};

// Throws Error("not_cubic") or Error("disconnected").
CubicWitness validate_cubic(const LabeledGraph& g);

std::vector<std::vector<Vertex>> connected_components(const LabeledGraph& g);
bool is_connected(const LabeledGraph& g);

// Lowpoint bridge finder. Throws Error("disconnected").
std::set<Edge> find_bridges(const LabeledGraph& g);
// Removes each edge in turn and re-tests connectivity.
std::set<Edge> find_bridges_bruteforce(const LabeledGraph& g);

struct Bipartition {
  std::set<Vertex> class_a;  // holds the smallest label
  std::set<Vertex> class_b;
  bool in_a(Vertex v) const { return class_a.count(v) != 0; }
};

struct BipartitionResult {
  std::optional<Bipartition> classes;
  std::vector<Vertex> odd_cycle;  // closed walk witness when not bipartite
  bool ok() const { return classes.has_value(); }
};

// BFS 2-colouring. Requires a connected graph (throws Error("disconnected")).
BipartitionResult bipartition(const LabeledGraph& g);
// Same colouring without the connectivity requirement: each component is
// oriented so its smallest label lands in class A.
BipartitionResult bipartition_any(const LabeledGraph& g);
bool is_bipartite(const LabeledGraph& g);

// Backtracking isomorphism search for desk-scale graphs. Returns a map from
// vertices of `a` to vertices of `b`.
std::optional<std::map<Vertex, Vertex>> find_isomorphism(const LabeledGraph& a,
                                                         const LabeledGraph& b);
bool is_isomorphism(const LabeledGraph& a, const LabeledGraph& b,
                    const std::map<Vertex, Vertex>& map);

}  // namespace hexbrace
