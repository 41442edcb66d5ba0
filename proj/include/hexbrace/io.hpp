#pragma once

#include <string>

#include "hexbrace/graph.hpp"

namespace hexbrace {

// Edge-list document: first non-comment line "n m", then m lines "u v" with
// 0 <= u, v < n. '#' starts a comment. Errors carry the 1-based line number:
// Error kinds "syntax", "loop", "duplicate_edge", "vertex_range".
LabeledGraph parse_graph(const std::string& text);
LabeledGraph read_graph_file(const std::string& path);

// Inverse of parse_graph for graphs labelled 0..n-1.
std::string format_edge_list(const LabeledGraph& g);

std::string read_text_file(const std::string& path);

}  // namespace hexbrace
