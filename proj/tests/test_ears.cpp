#include <algorithm>
#include <functional>
#include "doctest.h"
#include "hexbrace/corpus.hpp"
#include "hexbrace/ears.hpp"
#include "hexbrace/matching.hpp"

using namespace hexbrace;

namespace {

std::string error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

Matching matching_of(std::initializer_list<std::pair<Vertex, Vertex>> es) {
  Matching m;
  for (auto [a, b] : es) m.insert(Edge(a, b));
  return m;
}

}  // namespace

TEST_CASE("K4 decomposition from the 01/23 matching") {
  const auto g = corpus::k4();
  const auto m = matching_of({{0, 1}, {2, 3}});
  const auto d = odd_ear_decomposition(g, m);
  CHECK(d.g0 == std::vector<Vertex>{0, 1, 2, 3});
  REQUIRE(d.ears.size() == 2);
  CHECK(d.ears[0].path == std::vector<Vertex>{0, 2});
  CHECK(d.ears[1].path == std::vector<Vertex>{1, 3});
  CHECK(verify_decomposition(g, m, d).ok());
}

TEST_CASE("decompositions of the bridgeless corpus verify") {
  for (const auto& [name, g] : corpus::bridgeless()) {
    CAPTURE(name);
    for (const auto& m : enumerate_perfect_matchings(g)) {
      const auto d = odd_ear_decomposition(g, m);
      const auto diag = verify_decomposition(g, m, d);
      CHECK_MESSAGE(diag.ok(), diag.summary());
      CHECK(d.ears.size() == g.num_edges() - g.num_vertices());
      CHECK(d.g0.size() % 2 == 0);
      for (const auto& e : d.ears) {
        CHECK(e.length() % 2 == 1);
        CHECK(!m.count(Edge(e.path[0], e.path[1])));
        CHECK(!m.count(Edge(e.path[e.path.size() - 2], e.path.back())));
      }
      CHECK(stage_graph(d, d.ears.size()).same_as(g));
    }
  }
}

TEST_CASE("decomposition is independent of edge insertion order") {
  const auto g = corpus::petersen();
  auto edges = g.edges();
  std::reverse(edges.begin(), edges.end());
  LabeledGraph h(g.num_vertices());
  for (const Edge& e : edges) h.add_edge(e);
  const auto m = *find_perfect_matching(g);
  const auto a = odd_ear_decomposition(g, m);
  const auto b = odd_ear_decomposition(h, m);
  CHECK(a.g0 == b.g0);
  REQUIRE(a.ears.size() == b.ears.size());
  for (std::size_t i = 0; i < a.ears.size(); ++i) CHECK(a.ears[i].path == b.ears[i].path);
}

TEST_CASE("bridged graph is rejected as not matching covered") {
  const auto g = corpus::bridged10();
  const auto m = find_perfect_matching(g);
  REQUIRE(m.has_value());
  try {
    odd_ear_decomposition(g, *m);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == "not_matching_covered");
    CHECK(std::string(e.what()).rfind("NotMatchingCovered", 0) == 0);
  }
}

TEST_CASE("non-perfect matching is rejected") {
  const auto g = corpus::k4();
  CHECK(error_kind([&] { odd_ear_decomposition(g, matching_of({{0, 1}})); }) == "not_perfect");
}

TEST_CASE("verifier flags an even ear") {
  const auto g = corpus::k4();
  const auto m = matching_of({{0, 1}, {2, 3}});
  auto d = odd_ear_decomposition(g, m);
  d.ears[1].path = {1, 3, 0};
  const auto diag = verify_decomposition(g, m, d);
  bool found = false;
  for (const auto& v : diag.violations) found |= v.clause == "ear" && v.message == "ear 2 even";
  CHECK(found);
}

namespace {

bool has_message(const Diagnostics& d, const std::string& msg) {
  for (const auto& v : d.violations) {
    if (v.message == msg) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("verifier flags a matching that is not absolute") {
  const auto prism = corpus::prism();
  OddEarDecomposition dp;
  dp.g0 = {0, 1, 4, 3};
  dp.ears = {Ear{{0, 2, 5, 3}}, Ear{{1, 2}}, Ear{{4, 5}}};
  CHECK(verify_decomposition(prism, matching_of({{0, 1}, {3, 4}, {2, 5}}), dp).ok());
  CHECK(has_message(verify_decomposition(prism, matching_of({{0, 2}, {1, 4}, {3, 5}}), dp),
                    "absoluteness fails at i=0"));

  // {45, 67} covers G0 but leaves 4 and 6 bare once the first ear is in.
  const auto cube = corpus::cube();
  OddEarDecomposition dc;
  dc.g0 = {0, 1, 3, 2};
  dc.ears = {Ear{{0, 4, 6, 2}}, Ear{{1, 5, 7, 3}}, Ear{{4, 5}}, Ear{{6, 7}}};
  CHECK(verify_decomposition(cube, matching_of({{0, 1}, {2, 3}, {4, 6}, {5, 7}}), dc).ok());
  const auto diag = verify_decomposition(cube, matching_of({{0, 1}, {2, 3}, {4, 5}, {6, 7}}), dc);
  CHECK(has_message(diag, "absoluteness fails at i=1"));
  CHECK(!has_message(diag, "absoluteness fails at i=0"));
}

TEST_CASE("paths of the first stage of K4") {
  const auto g = corpus::k4();
  const auto m = matching_of({{0, 1}, {2, 3}});
  const auto d = odd_ear_decomposition(g, m);
  const auto g1 = stage_graph(d, 1);
  const auto paths = graph_paths(g1);
  REQUIRE(paths.size() == 3);
  for (const auto& p : paths) {
    CHECK(p.a() == 0);
    CHECK(p.b() == 2);
  }
}

TEST_CASE("matching paths: one per branch vertex, never the newest ear at its ends") {
  for (const auto& [name, g] : corpus::bridgeless()) {
    CAPTURE(name);
    const auto m = *find_perfect_matching(g);
    const auto d = odd_ear_decomposition(g, m);
    for (std::size_t i = 1; i <= d.ears.size(); ++i) {
      const auto gi = stage_graph(d, i);
      const auto vp = matching_paths(gi, m);
      std::size_t branch = 0;
      for (Vertex v : gi.vertices()) branch += gi.degree(v) == 3;
      CHECK(vp.size() == branch);
      for (const auto& x : vp) {
        CHECK(x.paths.size() == 3);
        CHECK(x.pseudo_neighbors.size() == 3);
        std::size_t hits = 0;
        for (const auto& p : x.paths) hits += m.count(p.end_edge(x.v));
        CHECK(hits == 1);
        CHECK(m.count(x.matching_path.end_edge(x.v)));
      }
      const GPath newest = make_path(d.ears[i - 1].path);
      for (Vertex end : {d.ears[i - 1].alpha(), d.ears[i - 1].beta()}) {
        const auto mp = matching_path_of(graph_paths(gi), m, end);
        REQUIRE(mp.has_value());
        CHECK(!(*mp == newest));
      }
    }
  }
}
