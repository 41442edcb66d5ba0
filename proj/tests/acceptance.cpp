// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hexbrace/brace.hpp"
#include "hexbrace/corpus.hpp"
#include "hexbrace/ears.hpp"
#include "hexbrace/hexagon.hpp"
#include "hexbrace/matching.hpp"
#include "hexbrace/pipeline.hpp"

using namespace hexbrace;

namespace {

struct Criterion {
  int id;
  const char* what;
  double limit_s;  // wall-clock limit
  std::function<std::string()> run;  // empty string on success, else the reason
};

std::string all_of(const std::vector<std::pair<std::string, bool>>& checks) {
  for (const auto& [name, ok] : checks) {
    if (!ok) return name;
  }
  return "";
}

bool is_matching_of(const LabeledGraph& g, const std::vector<Edge>& es) {
  return is_perfect_matching(g, Matching(es.begin(), es.end()));
}

std::vector<std::vector<Edge>> sorted_faces(std::vector<std::vector<Edge>> f) {
  std::sort(f.begin(), f.end());
  return f;
}

std::string hexagon_structure() {
  for (const auto& [name, g] : corpus::bridgeless()) {
    const auto h = build_hexagon_graph(g);
    const std::size_t n = g.num_vertices();
    bool regular = true;
    for (Vertex v : h.graph.vertices()) regular &= h.graph.degree(v) == 4;
    const auto r = all_of({{"bipartite", is_bipartite(h.graph)},
                           {"4-regular", regular},
                           {"6n vertices", h.graph.num_vertices() == 6 * n},
                           {"12n edges", h.graph.num_edges() == 12 * n},
                           {"red perfect", is_matching_of(h.graph, h.edges_of_color(EdgeColor::kRed))},
                           {"white perfect", is_matching_of(h.graph, h.edges_of_color(EdgeColor::kWhite))},
                           {"2^n blue matchings", blue_matchings(h).size() == (std::size_t{1} << n)},
                           {"checker", check_hexagon_graph(h).ok()}});
    if (!r.empty()) return name + ": " + r;
  }
  return "";
}

std::string bijection_and_faces() {
  for (const auto& g : {corpus::k4(), corpus::k33()}) {
    const auto h = build_hexagon_graph(g);
    for (const auto& m : blue_matchings(h)) {
      const auto r = matching_to_rotation(h, m);
      if (!(rotation_to_matching(h, r) == m)) return "matching roundtrip";
      std::vector<std::vector<Edge>> induced, traced;
      for (const auto& c : mdw_cycles(h, m)) induced.push_back(edge_multiset(induced_face(h, c)));
      for (const auto& f : trace_faces(g, r).faces) traced.push_back(edge_multiset(f));
      if (sorted_faces(induced) != sorted_faces(traced)) return "face multisets differ";
    }
    for (const auto& r : all_rotation_systems(g)) {
      if (!(matching_to_rotation(h, rotation_to_matching(h, r)) == r)) return "rotation roundtrip";
    }
  }
  return "";
}

std::string dual_loop_equivalence() {
  // Frozen counts: 2 for K4, 4 for K3,3.
  const std::map<std::string, std::size_t> expect{{"K4", 2}, {"K3,3", 4}};
  for (const auto& [name, g] : std::vector<std::pair<std::string, LabeledGraph>>{{"K4", corpus::k4()}, {"K3,3", corpus::k33()}}) {
    const auto h = build_hexagon_graph(g);
    std::size_t safe = 0, clean = 0;
    for (const auto& m : blue_matchings(h)) safe += is_safe(h, m).safe;
    for (const auto& r : all_rotation_systems(g)) clean += has_no_dual_loop(g, r);
    if (safe != clean) return name + ": " + std::to_string(safe) + " safe vs " + std::to_string(clean);
    if (safe != expect.at(name)) return name + ": count " + std::to_string(safe);
  }
  return "";
}

std::string dcdc() {
  for (const auto& [name, g] : corpus::bridgeless()) {
    const auto h = build_hexagon_graph(g);
    const auto m = find_safe_matching(h);
    if (!m) return name + ": no safe matching";
    const auto d = verify_dcdc(g, extract_dcdc(h, *m));
    if (!d.ok()) return name + ": " + d.summary();
  }
  return "";
}

std::string brace_dichotomy() {
  for (const auto& [name, g] : corpus::bridgeless()) {
    const auto r = is_brace(build_hexagon_graph(g).graph);
    if (!r.brace) return name + ": " + r.describe();
  }
  const auto b = corpus::bridged10();
  if (is_brace(build_hexagon_graph(b).graph).brace) return "BRIDGED10 hexagon graph is a brace";
  if (find_bridges(b).empty()) return "BRIDGED10 has no bridge";
  return "";
}

std::string base_set() {
  // Even cycle vertices to one class, odd to the other.
  const std::map<Vertex, Vertex> phi{{0, 0}, {2, 1}, {4, 2}, {1, 3}, {3, 4}, {5, 5}};
  if (!generate_base(BaseFamily::kMoebiusLadder, 6).relabeled(phi).same_as(corpus::k33())) return "M6 != K3,3";
  const std::vector<std::pair<BaseFamily, std::vector<std::size_t>>> members{
      {BaseFamily::kMoebiusLadder, {6, 10, 14}},
      {BaseFamily::kLadder, {8, 12, 16}},
      {BaseFamily::kBiwheel, {10, 12, 14, 16}}};
  for (const auto& [f, sizes] : members) {
    for (std::size_t s : sizes) {
      const auto r = is_brace(generate_base(f, s));
      if (!r.brace) return std::string(to_string(f)) + " " + std::to_string(s) + ": " + r.describe();
    }
  }
  return "";
}

std::string generation() {
  for (const auto& [name, g] : corpus::bridgeless()) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = generate_hexagon_trace(g);
    const auto d = verify_pipeline(g, rep);
    if (!d.ok()) return name + ": " + d.summary();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > 30.0) return name + ": " + std::to_string(s) + " s";
  }
  return "";
}

std::string non_brace_oracle() {
  const auto c6 = corpus::cycle(6);
  const auto r = is_brace(c6);
  if (r.brace || !r.pair) return "C6 reported as a brace";
  for (const auto& m : enumerate_perfect_matchings(c6)) {
    if (m.count(r.pair->first) && m.count(r.pair->second)) return "witness pair extends";
  }
  return "";
}

std::string ear_decomposition() {
  for (const auto& [name, g] : corpus::bridgeless()) {
    for (const auto& m : enumerate_perfect_matchings(g)) {
      const auto d = verify_decomposition(g, m, odd_ear_decomposition(g, m));
      if (!d.ok()) return name + ": " + d.summary();
    }
  }
  const auto b = corpus::bridged10();
  try {
    odd_ear_decomposition(b, *find_perfect_matching(b));
  } catch (const Error& e) {
    if (e.kind() == "not_matching_covered" && std::string(e.what()).rfind("NotMatchingCovered", 0) == 0) return "";
    return std::string("wrong error: ") + e.what();
  }
  return "BRIDGED10 accepted";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "hexagon structure", 1.0, hexagon_structure},
      {2, "bijection and face correspondence", 5.0, bijection_and_faces},
      {3, "dual-loop equivalence", 5.0, dual_loop_equivalence},
      {4, "DCDC on the bridgeless corpus", 10.0, dcdc},
      {5, "brace dichotomy", 60.0, brace_dichotomy},
      {6, "base set", 30.0, base_set},
      {7, "generation traces", 150.0, generation},
      {8, "non-brace oracle", 1.0, non_brace_oracle},
      {9, "ear decomposition", 1.0, ear_decomposition},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.run();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && s > c.limit_s) why = "over time limit";
    std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", why.empty() ? "PASS" : "FAIL", c.id, c.what, s,
                c.limit_s, why.empty() ? "" : ": ", why.c_str());
    failed += !why.empty();
  }
  return failed == 0 ? 0 : 1;
}
