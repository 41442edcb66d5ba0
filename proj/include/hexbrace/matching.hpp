#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "hexbrace/graph.hpp"

namespace hexbrace {

using Matching = std::set<Edge>;

// Vertex-disjoint edges, all present in g.
bool is_matching(const LabeledGraph& g, const Matching& m);
bool is_perfect_matching(const LabeledGraph& g, const Matching& m);

// Backtracking on the lowest unmatched vertex, neighbours in adjacency order.
std::optional<Matching> find_perfect_matching(const LabeledGraph& g);

// True iff g minus the endpoints of `e` and `f` has a perfect matching.
// Requires g bipartite; throws Error("invalid_pair") when e, f share a vertex
// or are absent.
bool perfect_matching_exists_bipartite(const LabeledGraph& g, const Edge& e,
                                       const Edge& f);

// Hopcroft-Karp on a dense bipartite view. `left`/`right` give the side of
// every live vertex (indices into the dense graph); dead vertices are skipped.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(const DenseGraph& g, const std::vector<bool>& left);
  // Maximum matching size with the vertices flagged in `removed` deleted.
  int max_matching(const std::vector<bool>& removed);

 private:
  bool bfs(const std::vector<bool>& removed);
  bool dfs(int u, const std::vector<bool>& removed);

  const DenseGraph& g_;
  std::vector<int> left_vertices_;
  std::vector<int> mate_;
  std::vector<int> dist_;
};

constexpr std::size_t kDefaultMatchingCap = 1000000;

// All perfect matchings in the order produced by lowest-unmatched-vertex
// branching. Throws Error("cap_exceeded") past `cap`.
std::vector<Matching> enumerate_perfect_matchings(
    const LabeledGraph& g, std::size_t cap = kDefaultMatchingCap);

}  // namespace hexbrace
