#include <functional>
#include <random>

#include "doctest.h"
#include "hexbrace/corpus.hpp"
#include "hexbrace/matching.hpp"

using namespace hexbrace;

namespace {

// Subset enumeration oracle: every edge subset of size n/2 that covers all
// vertices. Only for tiny graphs.
std::vector<Matching> all_perfect_matchings_oracle(const LabeledGraph& g) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<Matching> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) * 2 != g.num_vertices()) continue;
    Matching cand;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) cand.insert(edges[i]);
    }
    std::set<Vertex> cover;
    for (const Edge& e : cand) {
      cover.insert(e.u);
      cover.insert(e.v);
    }
    if (cover.size() == g.num_vertices()) out.push_back(cand);
  }
  return out;
}

LabeledGraph random_bipartite(std::size_t half, double p, std::mt19937& rng) {
  LabeledGraph g(2 * half);
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < half; ++a) {
    for (Vertex b = 0; b < half; ++b) {
      if (coin(rng)) g.add_edge(a, static_cast<Vertex>(half + b));
    }
  }
  return g;
}

}  // namespace

TEST_CASE("find_perfect_matching examples") {
  auto c6 = find_perfect_matching(corpus::cycle(6));
  REQUIRE(c6);
  CHECK(*c6 == Matching{Edge(0, 1), Edge(2, 3), Edge(4, 5)});
  CHECK_FALSE(find_perfect_matching(corpus::cycle(5)));
  auto p = find_perfect_matching(corpus::petersen());
  REQUIRE(p);
  CHECK(p->size() == 5);
  CHECK(is_perfect_matching(corpus::petersen(), *p));
}

TEST_CASE("find_perfect_matching agrees with the subset oracle on existence") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + 2 * (trial % 4);
    LabeledGraph g(n);
    std::bernoulli_distribution coin(0.4);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (coin(rng)) g.add_edge(a, b);
      }
    }
    if (g.num_edges() > 18) continue;
    auto found = find_perfect_matching(g);
    const auto all = all_perfect_matchings_oracle(g);
    CHECK(found.has_value() == !all.empty());
    if (found) CHECK(is_perfect_matching(g, *found));
    CHECK(enumerate_perfect_matchings(g).size() == all.size());
  }
}

TEST_CASE("enumerate_perfect_matchings counts") {
  CHECK(enumerate_perfect_matchings(corpus::cycle(6)).size() == 2);
  CHECK(enumerate_perfect_matchings(corpus::k4()).size() == 3);
  auto k33 = enumerate_perfect_matchings(corpus::k33());
  CHECK(k33.size() == 6);
  CHECK(all_perfect_matchings_oracle(corpus::k33()).size() == 6);
  std::set<Matching> distinct(k33.begin(), k33.end());
  CHECK(distinct.size() == 6);
  // Deterministic order.
  CHECK(enumerate_perfect_matchings(corpus::k33()) == k33);
  try {
    enumerate_perfect_matchings(corpus::k33(), 5);
    FAIL("expected cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == "cap_exceeded");
  }
}

TEST_CASE("perfect_matching_exists_bipartite examples") {
  auto c6 = corpus::cycle(6);
  CHECK_FALSE(perfect_matching_exists_bipartite(c6, Edge(0, 1), Edge(3, 4)));
  CHECK(perfect_matching_exists_bipartite(c6, Edge(0, 1), Edge(2, 3)));
  auto k33 = corpus::k33();
  const auto edges = k33.edges();
  for (const Edge& e : edges) {
    for (const Edge& f : edges) {
      if (e < f && !e.shares_vertex(f)) CHECK(perfect_matching_exists_bipartite(k33, e, f));
    }
  }
  CHECK_THROWS(perfect_matching_exists_bipartite(c6, Edge(0, 1), Edge(1, 2)));
  CHECK_THROWS(perfect_matching_exists_bipartite(c6, Edge(0, 1), Edge(0, 3)));
}

TEST_CASE("perfect_matching_exists_bipartite agrees with enumeration") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    auto g = random_bipartite(3 + trial % 6, 0.5, rng);
    if (g.num_edges() < 2) continue;
    const auto all = enumerate_perfect_matchings(g);
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (edges[i].shares_vertex(edges[j])) continue;
        bool want = false;
        for (const auto& m : all) want |= m.count(edges[i]) && m.count(edges[j]);
        CHECK(perfect_matching_exists_bipartite(g, edges[i], edges[j]) == want);
      }
    }
  }
}
