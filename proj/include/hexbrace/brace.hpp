#pragma once

#include <optional>
#include <string>
#include <utility>

#include "hexbrace/graph.hpp"

namespace hexbrace {

struct BraceResult {
  bool brace = true;
  // Empty when brace; otherwise one of "connected", "bipartite",
  // "min_vertices", "perfect_matching", "extendable".
  std::string clause;
  std::optional<std::pair<Edge, Edge>> pair;  // first failing pair

  std::string describe() const;
};

// Tests every vertex-disjoint edge pair (in lexicographic order of the sorted
// edge list). jobs > 1 spreads the first edge of each pair across OpenMP
// workers; the reported pair is still the lexicographically first failure.
BraceResult is_brace(const LabeledGraph& g, int jobs = 1);
// Single-threaded reference built on perfect_matching_exists_bipartite.
BraceResult is_brace_reference(const LabeledGraph& g);

enum class BaseFamily { kMoebiusLadder, kLadder, kBiwheel };

// "moebius_ladder"/"moebius"/"M", "ladder"/"L", "biwheel"/"B".
BaseFamily parse_base_family(const std::string& name);
const char* to_string(BaseFamily f);

// Moebius ladder M_{2k}: cycle 0..2k-1 plus diameters i-(i+k), size 6,10,...
// Ladder L_{4k}: cycles 0..2k-1 and 2k..4k-1 plus rungs i-(i+2k), size 8,12,...
// Biwheel B_{2n}: rim cycle 0..2n-3, hub 2n-2 on even rim vertices, hub 2n-1
// on odd ones, size 10,12,...
// Throws Error("base_size") outside the family's sizes.
LabeledGraph generate_base(BaseFamily family, std::size_t size);
// Parses names like "L8", "M6", "B10".
LabeledGraph generate_base(const std::string& short_name);

}  // namespace hexbrace
