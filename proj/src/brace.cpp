#include "hexbrace/brace.hpp"

#include <algorithm>
#include <atomic>
#include <climits>

#include "hexbrace/matching.hpp"

namespace hexbrace {

std::string BraceResult::describe() const {
  if (brace) return "brace";
  if (pair) {
    return "not a brace: pair (" + to_string(pair->first) + ", " + to_string(pair->second) + ")";
  }
  return "not a brace: " + clause;
}

namespace {

// Clauses other than pair extendability. Returns false with `out` filled.
bool basic_clauses(const LabeledGraph& g, BraceResult& out) {
  out = BraceResult{};
  auto fail = [&](const char* c) {
    out.brace = false;
    out.clause = c;
    return false;
  };
  if (g.num_vertices() == 0 || !is_connected(g)) return fail("connected");
  if (!is_bipartite(g)) return fail("bipartite");
  if (g.num_vertices() < 6) return fail("min_vertices");
  return true;
}

// Shared state for pair queries on one graph.
struct PairOracle {
  DenseGraph d;
  std::vector<bool> left;
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> dense_edges;
  int half = 0;

  explicit PairOracle(const LabeledGraph& g) : d(g), edges(g.edges()) {
    auto parts = bipartition_any(g);
    left.resize(d.size());
    for (int i = 0; i < d.size(); ++i) left[i] = parts.classes->in_a(d.labels[i]);
    for (const Edge& e : edges) dense_edges.emplace_back(d.index.at(e.u), d.index.at(e.v));
    int a = 0;
    for (bool l : left) a += l;
    half = a;
  }

  bool balanced() const { return 2 * half == d.size(); }

  bool has_perfect_matching() const {
    BipartiteMatcher m(d, left);
    return m.max_matching(std::vector<bool>(d.size(), false)) == half;
  }

  // Index of the first j > i whose pair (i, j) fails, or -1.
  int first_failure_from(int i) const {
    BipartiteMatcher matcher(d, left);
    std::vector<bool> removed(d.size(), false);
    const auto [a, b] = dense_edges[i];
    for (int j = i + 1; j < static_cast<int>(dense_edges.size()); ++j) {
      const auto [c, e] = dense_edges[j];
      if (c == a || c == b || e == a || e == b) continue;
      removed[a] = removed[b] = removed[c] = removed[e] = true;
      const bool ok = matcher.max_matching(removed) == half - 2;
      removed[c] = removed[e] = false;
      if (!ok) return j;
    }
    return -1;
  }
};

}  // namespace

BraceResult is_brace(const LabeledGraph& g, int jobs) {
  BraceResult res;
  if (!basic_clauses(g, res)) return res;
  PairOracle oracle(g);
  if (!oracle.balanced() || !oracle.has_perfect_matching()) {
    res.brace = false;
    res.clause = "perfect_matching";
    return res;
  }
  const int m = static_cast<int>(oracle.edges.size());
  std::atomic<long long> best{LLONG_MAX};  // encoded i * m + j
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, jobs)) if (jobs > 1)
  for (int i = 0; i < m; ++i) {
    if (static_cast<long long>(i) * m > best.load(std::memory_order_relaxed)) continue;
    const int j = oracle.first_failure_from(i);
    if (j < 0) continue;
    const long long code = static_cast<long long>(i) * m + j;
    long long cur = best.load();
    while (code < cur && !best.compare_exchange_weak(cur, code)) {
    }
  }
  if (best.load() != LLONG_MAX) {
    const long long code = best.load();
    res.brace = false;
    res.clause = "extendable";
    res.pair = std::make_pair(oracle.edges[code / m], oracle.edges[code % m]);
  }
  return res;
}

BraceResult is_brace_reference(const LabeledGraph& g) {
  BraceResult res;
  if (!basic_clauses(g, res)) return res;
  if (!find_perfect_matching(g)) {
    res.brace = false;
    res.clause = "perfect_matching";
    return res;
  }
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].shares_vertex(edges[j])) continue;
      if (!perfect_matching_exists_bipartite(g, edges[i], edges[j])) {
        res.brace = false;
        res.clause = "extendable";
        res.pair = std::make_pair(edges[i], edges[j]);
        return res;
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------

BaseFamily parse_base_family(const std::string& name) {
  if (name == "moebius_ladder" || name == "moebius" || name == "M") return BaseFamily::kMoebiusLadder;
  if (name == "ladder" || name == "L") return BaseFamily::kLadder;
  if (name == "biwheel" || name == "B") return BaseFamily::kBiwheel;
  throw Error("base_family", "unknown base family '" + name + "'");
}

const char* to_string(BaseFamily f) {
  switch (f) {
    case BaseFamily::kMoebiusLadder:
      return "moebius_ladder";
    case BaseFamily::kLadder:
      return "ladder";
    case BaseFamily::kBiwheel:
      return "biwheel";
  }
  return "?";
}

LabeledGraph generate_base(BaseFamily family, std::size_t size) {
  auto bad = [&]() {
    return Error("base_size", std::string("size ") + std::to_string(size) + " not valid for " +
                                  to_string(family));
  };
  const auto V = [](std::size_t x) { return static_cast<Vertex>(x); };
  switch (family) {
    case BaseFamily::kMoebiusLadder: {
      if (size < 6 || size % 4 != 2) throw bad();
      const std::size_t k = size / 2;
      LabeledGraph g(size);
      for (std::size_t i = 0; i < size; ++i) g.add_edge(V(i), V((i + 1) % size));
      for (std::size_t i = 0; i < k; ++i) g.add_edge(V(i), V(i + k));
      return g;
    }
    case BaseFamily::kLadder: {
      if (size < 8 || size % 4 != 0) throw bad();
      const std::size_t c = size / 2;
      LabeledGraph g(size);
      for (std::size_t i = 0; i < c; ++i) g.add_edge(V(i), V((i + 1) % c));
      for (std::size_t i = 0; i < c; ++i) g.add_edge(V(c + i), V(c + (i + 1) % c));
      for (std::size_t i = 0; i < c; ++i) g.add_edge(V(i), V(c + i));
      return g;
    }
    case BaseFamily::kBiwheel: {
      if (size < 10 || size % 2 != 0) throw bad();
      const std::size_t rim = size - 2;
      LabeledGraph g(size);
      for (std::size_t i = 0; i < rim; ++i) g.add_edge(V(i), V((i + 1) % rim));
      for (std::size_t i = 0; i < rim; ++i) g.add_edge(V(i), V(i % 2 == 0 ? rim : rim + 1));
      return g;
    }
  }
  throw bad();
}

LabeledGraph generate_base(const std::string& short_name) {
  if (short_name.size() < 2) throw Error("base_family", "bad base name '" + short_name + "'");
  const std::string digits = short_name.substr(1);
  if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6) {
    throw Error("base_family", "bad base name '" + short_name + "'");
  }
  return generate_base(parse_base_family(short_name.substr(0, 1)), std::stoul(digits));
}

}  // namespace hexbrace
