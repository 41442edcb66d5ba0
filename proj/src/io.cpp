#include "hexbrace/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace hexbrace {

namespace {

[[noreturn]] void fail(const std::string& kind, int line, const std::string& what) {
  throw Error(kind, "line " + std::to_string(line) + ": " + what);
}

// Parses a whitespace-separated list of exactly two non-negative integers.
std::optional<std::pair<unsigned long, unsigned long>> two_numbers(
    const std::string& s) {
  std::istringstream in(s);
  std::vector<unsigned long> vals;
  std::string tok;
  while (in >> tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      return std::nullopt;
    }
    if (tok.size() > 9) return std::nullopt;
    vals.push_back(std::stoul(tok));
  }
  if (vals.size() != 2) return std::nullopt;
  return std::make_pair(vals[0], vals[1]);
}

}  // namespace

LabeledGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::optional<std::pair<unsigned long, unsigned long>> header;
  LabeledGraph g;
  std::size_t seen_edges = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto nums = two_numbers(line);
    if (!nums) fail("syntax", line_no, "expected two non-negative integers");
    if (!header) {
      header = nums;
      g = LabeledGraph(header->first);
      continue;
    }
    auto [u, v] = *nums;
    if (u >= header->first || v >= header->first) {
      fail("vertex_range", line_no,
           "vertex index >= declared n=" + std::to_string(header->first));
    }
    if (u == v) fail("loop", line_no, "loop edge at " + std::to_string(u));
    if (g.has_edge(u, v)) {
      fail("duplicate_edge", line_no,
           "duplicate edge " + to_string(Edge(u, v)));
    }
    g.add_edge(u, v);
    ++seen_edges;
  }
  if (!header) fail("syntax", line_no, "missing \"n m\" header");
  if (seen_edges != header->second) {
    fail("syntax", line_no,
         "declared " + std::to_string(header->second) + " edges, found " +
             std::to_string(seen_edges));
  }
  return g;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LabeledGraph read_graph_file(const std::string& path) {
  return parse_graph(read_text_file(path));
}

std::string format_edge_list(const LabeledGraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace hexbrace
