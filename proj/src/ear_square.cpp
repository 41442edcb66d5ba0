#include "hexbrace/ear_square.hpp"

#include <algorithm>
#include <set>

#include "hexbrace/brace.hpp"

namespace hexbrace {

const Projection* EarSquareGraph::find(const GPath& p) const {
  for (const auto& pr : projections) {
    if (pr.path == p) return &pr;
  }
  return nullptr;
}

std::optional<Vertex> EarSquareGraph::owner(Vertex q) const {
  for (const auto& [v, s] : squares) {
    if (std::find(s.begin(), s.end(), q) != s.end()) return v;
  }
  return std::nullopt;
}

EarSquareGraph EarSquareGraph::relabeled(const std::map<Vertex, Vertex>& map) const {
  EarSquareGraph out;
  out.graph = graph.relabeled(map);
  auto f = [&](Vertex x) { return map.at(x); };
  auto fe = [&](const Edge& e) { return Edge(f(e.u), f(e.v)); };
  for (const auto& [v, s] : squares) out.squares[v] = {f(s[0]), f(s[1]), f(s[2]), f(s[3])};
  for (const auto& p : projections) {
    out.projections.push_back(Projection{p.path, {fe(p.edges[0]), fe(p.edges[1])}, fe(p.support_a),
                                         fe(p.support_b)});
  }
  return out;
}

bool is_square_edge(const std::array<Vertex, 4>& s, const Edge& e) {
  for (int j = 0; j < 4; ++j) {
    if (Edge(s[j], s[(j + 1) % 4]) == e) return true;
  }
  return false;
}

namespace {

int overlap(const Edge& a, const Edge& b) {
  if (a == b) return 2;
  return a.shares_vertex(b) ? 1 : 0;
}

}  // namespace

Diagnostics check_ear_square_graph(const EarSquareGraph& q, const LabeledGraph& gi,
                                   const Matching& m) {
  Diagnostics d;
  const auto& Q = q.graph;

  // Clause 1: one square per degree-3 vertex, disjoint, covering V(Q).
  std::set<Vertex> v3;
  for (const auto& [v, nb] : gi) {
    if (nb.size() == 3) v3.insert(v);
  }
  std::set<Vertex> keys;
  for (const auto& kv : q.squares) keys.insert(kv.first);
  if (keys != v3) d.add("1", "square set differs from the degree-3 vertices of G_i");
  std::set<Vertex> seen;
  std::set<Edge> square_edges;
  for (const auto& [v, s] : q.squares) {
    for (int j = 0; j < 4; ++j) {
      if (!seen.insert(s[j]).second) d.add("1", "square vertex " + std::to_string(s[j]) + " reused");
      const Edge e(s[j], s[(j + 1) % 4]);
      if (!Q.has_vertex(e.u) || !Q.has_vertex(e.v) || !Q.has_edge(e)) {
        d.add("1", "square of " + std::to_string(v) + " misses edge " + to_string(e));
      }
      square_edges.insert(e);
    }
  }
  if (seen.size() != Q.num_vertices()) d.add("1", "V(Q) is not the union of the squares");
  if (!d.ok()) return d;

  // Clause 2(a): one projection per path, K2,2 with its supporting edges.
  const auto paths = graph_paths(gi);
  std::set<GPath> want(paths.begin(), paths.end());
  std::set<GPath> have;
  std::set<Edge> proj_edges;
  for (const auto& p : q.projections) {
    const std::string name = "projection of path " + std::to_string(p.path.a()) + ".." +
                             std::to_string(p.path.b());
    if (!want.count(p.path)) {
      d.add("2(a)", name + " is not a path of G_i");
      continue;
    }
    if (!have.insert(p.path).second) d.add("2(a)", name + " listed twice");
    const auto& sa = q.squares.at(p.path.a());
    const auto& sb = q.squares.at(p.path.b());
    if (!is_square_edge(sa, p.support_a) || !is_square_edge(sb, p.support_b)) {
      d.add("2(a)", name + " has a supporting edge outside its squares");
      continue;
    }
    if (p.edges[0] == p.edges[1]) d.add("2(a)", name + " has fewer than 2 edges");
    std::multiset<Vertex> ends;
    for (const Edge& e : p.edges) {
      if (!Q.has_edge(e)) d.add("2(a)", name + " edge " + to_string(e) + " missing from Q");
      const bool ok = (p.support_a.contains(e.u) && p.support_b.contains(e.v)) ||
                      (p.support_a.contains(e.v) && p.support_b.contains(e.u));
      if (!ok) d.add("2(a)", name + " edge " + to_string(e) + " does not join its supporting edges");
      ends.insert(e.u);
      ends.insert(e.v);
    }
    const std::multiset<Vertex> all{p.support_a.u, p.support_a.v, p.support_b.u, p.support_b.v};
    if (ends != all) d.add("2(a)", name + " with its supporting edges is not a K2,2");
    for (const Edge& e : p.edges) {
      if (!proj_edges.insert(e).second) d.add("2(c)", "edge " + to_string(e) + " in two projections");
      if (square_edges.count(e)) d.add("2(c)", "projection edge " + to_string(e) + " is a square edge");
    }
  }
  for (const auto& p : want) {
    if (!have.count(p)) {
      d.add("2(a)", "path " + std::to_string(p.a()) + ".." + std::to_string(p.b()) + " has no projection");
    }
  }
  if (!d.ok()) return d;

  // Clause 2(b): cycle-path supporting edges at v are vertex disjoint.
  for (Vertex v : v3) {
    std::vector<Edge> cyc;
    for (const auto& p : paths_at(paths, v)) {
      if (!m.count(p.end_edge(v))) cyc.push_back(q.find(p)->support_at(v));
    }
    if (cyc.size() != 2) {
      d.add("2(b)", "vertex " + std::to_string(v) + " does not have exactly one matching-path");
    } else if (cyc[0].shares_vertex(cyc[1])) {
      d.add("2(b)", "cycle-path supporting edges at " + std::to_string(v) + " share a vertex");
    }
  }

  // E(Q) is exactly the square edges plus the projections.
  for (const Edge& e : Q.edges()) {
    if (!square_edges.count(e) && !proj_edges.count(e)) d.add("edges", "stray edge " + to_string(e));
  }
  if (!is_bipartite(Q)) d.add("bipartite", "Q is not bipartite");

  // Degree pattern: a unique j with degrees 4, 4, 3, 3 from v_j on.
  for (const auto& [v, s] : q.squares) {
    int hits = 0;
    for (int j = 0; j < 4; ++j) {
      hits += Q.degree(s[j]) == 4 && Q.degree(s[(j + 1) % 4]) == 4 && Q.degree(s[(j + 2) % 4]) == 3 &&
              Q.degree(s[(j + 3) % 4]) == 3;
    }
    if (hits != 1) d.add("degree", "square of " + std::to_string(v) + " breaks the 4,4,3,3 pattern");
  }
  return d;
}

Diagnostics check_square_graph(const EarSquareGraph& q, const LabeledGraph& g, const Matching& m) {
  Diagnostics d;
  for (const auto& [v, nb] : g) {
    if (nb.size() != 3) {
      d.add("1", "g is not cubic");
      return d;
    }
  }
  d = check_ear_square_graph(q, g, m);
  if (!d.ok()) return d;

  // Ladder components of Q minus the M-projections.
  LabeledGraph rest = q.graph;
  for (const auto& p : q.projections) {
    if (m.count(Edge(p.path.a(), p.path.b()))) {
      for (const Edge& e : p.edges) rest.remove_edge(e);
    }
  }
  LabeledGraph gm = g;
  for (const Edge& e : m) gm.remove_edge(e);
  const auto cycles = connected_components(gm);
  const auto comps = connected_components(rest);
  if (comps.size() != cycles.size()) {
    d.add("ladder", std::to_string(comps.size()) + " components for " + std::to_string(cycles.size()) +
                        " cycles of G - M");
    return d;
  }
  for (const auto& cyc : cycles) {
    std::set<Vertex> want;
    for (Vertex v : cyc) {
      for (Vertex x : q.squares.at(v)) want.insert(x);
    }
    bool matched = false;
    for (const auto& comp : comps) {
      if (std::set<Vertex>(comp.begin(), comp.end()) != want) continue;
      matched = true;
      const auto ladder = generate_base(BaseFamily::kLadder, 4 * cyc.size());
      if (!find_isomorphism(rest.induced(want), ladder)) {
        d.add("ladder", "component of cycle through " + std::to_string(cyc.front()) + " is not a ladder");
      }
    }
    if (!matched) {
      d.add("ladder", "no component holds exactly the squares of the cycle through " +
                          std::to_string(cyc.front()));
    }
  }
  return d;
}

namespace {

Projection make_projection(const GPath& path, Vertex u, Edge e1, Edge e2, Edge su, Edge sv) {
  Projection p;
  p.path = path;
  p.edges = {e1, e2};
  if (path.a() == u) {
    p.support_a = su;
    p.support_b = sv;
  } else {
    p.support_a = sv;
    p.support_b = su;
  }
  return p;
}

}  // namespace

EarStageResult build_q1(const LabeledGraph& g, const Matching& m, const OddEarDecomposition& d) {
  if (d.ears.empty()) throw Error("no_ears", "decomposition has no ears");
  const LabeledGraph g1 = stage_graph(d, 1);
  const Vertex u = d.ears[0].alpha();
  const Vertex v = d.ears[0].beta();
  const GPath pi = make_path(d.ears[0].path);
  std::vector<GPath> arcs;
  for (const auto& p : graph_paths(g1)) {
    if (p != pi) arcs.push_back(p);
  }
  if (arcs.size() != 2) throw Error("internal", "G_1 does not have three paths");
  (void)g;
  GPath xy = arcs[0], wz = arcs[1];
  const GPath mu = *matching_path_of(graph_paths(g1), m, u);
  const GPath mv = *matching_path_of(graph_paths(g1), m, v);

  EarStageResult r;
  bool primed = false;
  bool same;
  if (mu == mv) {
    same = true;
    primed = mu == wz;
  } else {
    same = false;
    primed = mv == wz;
  }
  r.instance = std::string(same ? "1" : "2") + (primed ? "'" : "");
  if (primed) std::swap(xy, wz);

  // L8: u_j = j, v_j = 4 + j.
  auto U = [](int j) { return static_cast<Vertex>(j); };
  auto V = [](int j) { return static_cast<Vertex>(4 + j); };
  r.q.graph = generate_base("L8");
  r.q.squares[u] = {U(0), U(1), U(2), U(3)};
  r.q.squares[v] = {V(0), V(1), V(2), V(3)};
  auto E = [](Vertex a, Vertex b) { return Edge(a, b); };
  if (same) {
    r.steps = {AugmentationStep::type1(V(0), U(2)), AugmentationStep::type1(V(3), U(1))};
    r.q.projections = {
        make_projection(xy, u, E(V(0), U(2)), E(V(3), U(1)), E(U(1), U(2)), E(V(3), V(0))),
        make_projection(wz, u, E(V(2), U(2)), E(V(3), U(3)), E(U(2), U(3)), E(V(2), V(3))),
        make_projection(pi, u, E(V(0), U(0)), E(V(1), U(1)), E(U(0), U(1)), E(V(0), V(1)))};
  } else {
    r.steps = {AugmentationStep::type1(V(1), U(3)), AugmentationStep::type1(V(0), U(2))};
    r.q.projections = {
        make_projection(pi, u, E(V(0), U(2)), E(V(1), U(3)), E(U(2), U(3)), E(V(0), V(1))),
        make_projection(wz, u, E(V(2), U(2)), E(V(3), U(3)), E(U(2), U(3)), E(V(2), V(3))),
        make_projection(xy, u, E(V(0), U(0)), E(V(1), U(1)), E(U(0), U(1)), E(V(0), V(1)))};
  }
  for (const auto& s : r.steps) apply_step(r.q.graph, s);
  std::sort(r.q.projections.begin(), r.q.projections.end(),
            [](const Projection& a, const Projection& b) { return a.path < b.path; });
  return r;
}

int classify_configuration(const EarSquareGraph& q, const Projection& p1, const Projection& p2) {
  (void)q;
  const Vertex x = p1.path.a(), y = p1.path.b(), w = p2.path.a(), z = p2.path.b();
  const std::set<Vertex> ends{x, y, w, z};
  if (ends.size() == 4) return 1;
  if (ends.size() == 3) {
    const Vertex s = p2.path.has_end(x) ? x : y;
    switch (overlap(p1.support_at(s), p2.support_at(s))) {
      case 1:
        return 2;
      case 2:
        return 3;
      default:
        return 4;
    }
  }
  if (p1.path == p2.path) return 9;
  int r1 = overlap(p1.support_at(x), p2.support_at(x));
  int r2 = overlap(p1.support_at(y), p2.support_at(y));
  if (r1 > r2) std::swap(r1, r2);
  if (r1 == 1 && r2 == 1) return 5;
  if (r1 == 0 && r2 == 0) return 6;
  if (r1 == 0 && r2 == 1) return 7;
  if (r1 == 0 && r2 == 2) return 8;
  throw Error("unreachable_case", "UnreachableCase(b.5): overlapping supporting edges at both ends");
}

}  // namespace hexbrace
