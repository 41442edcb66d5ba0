#include "hexbrace/ears.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hexbrace {

namespace {

std::map<Vertex, Vertex> partner_map(const LabeledGraph& g, const Matching& m) {
  if (!is_perfect_matching(g, m)) throw Error("not_perfect", "matching is not perfect");
  std::map<Vertex, Vertex> mate;
  for (const Edge& e : m) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

std::vector<Vertex> sorted_neighbors(const LabeledGraph& g, Vertex v) {
  auto n = g.neighbors(v);
  std::sort(n.begin(), n.end());
  return n;
}

}  // namespace

OddEarDecomposition odd_ear_decomposition(const LabeledGraph& g, const Matching& m) {
  const auto mate = partner_map(g, m);
  OddEarDecomposition d;
  if (g.empty()) throw Error("not_matching_covered", "empty graph");

  // G0: iterative deepening over simple alternating closed walks through s.
  const Vertex s = g.vertices().front();
  std::vector<Vertex> path{s, mate.at(s)};
  std::set<Vertex> on{s, mate.at(s)};
  std::function<bool(std::size_t)> close = [&](std::size_t target) -> bool {
    const Vertex last = path.back();
    if (path.size() == target) {
      return g.has_edge(last, s) && mate.at(last) != s;
    }
    for (Vertex a : sorted_neighbors(g, last)) {
      if (a == mate.at(last) || on.count(a)) continue;
      const Vertex b = mate.at(a);
      if (on.count(b)) continue;
      path.push_back(a);
      path.push_back(b);
      on.insert(a);
      on.insert(b);
      if (close(target)) return true;
      on.erase(a);
      on.erase(b);
      path.pop_back();
      path.pop_back();
    }
    return false;
  };
  bool found = false;
  for (std::size_t len = 4; len <= g.num_vertices() && !found; len += 2) found = close(len);
  if (!found) {
    throw Error("not_matching_covered",
                "NotMatchingCovered: no M-alternating cycle through vertex " + std::to_string(s));
  }
  d.g0 = path;

  std::set<Vertex> in_vertices(path.begin(), path.end());
  std::set<Edge> in_edges;
  for (std::size_t k = 0; k < path.size(); ++k) in_edges.insert(Edge(path[k], path[(k + 1) % path.size()]));

  while (in_edges.size() < g.num_edges()) {
    std::optional<std::vector<Vertex>> best;
    for (std::size_t len = 1; len <= g.num_vertices() + 1 && !best; len += 2) {
      std::vector<Vertex> cur;
      std::set<Vertex> used;
      std::function<void(Vertex)> grow = [&](Vertex last) {
        // cur ends with `last`, whose next edge must be outside M.
        for (Vertex a : sorted_neighbors(g, last)) {
          if (a == mate.at(last) || in_edges.count(Edge(last, a)) || used.count(a)) continue;
          if (in_vertices.count(a)) {
            if (cur.size() == len && a != cur.front()) {
              std::vector<Vertex> ear = cur;
              ear.push_back(a);
              if (ear.front() > ear.back()) std::reverse(ear.begin(), ear.end());
              if (!best || ear < *best) best = ear;
            }
            continue;
          }
          if (cur.size() + 2 > len) continue;
          const Vertex b = mate.at(a);
          cur.push_back(a);
          cur.push_back(b);
          used.insert(a);
          used.insert(b);
          grow(b);
          used.erase(a);
          used.erase(b);
          cur.pop_back();
          cur.pop_back();
        }
      };
      for (Vertex alpha : in_vertices) {
        cur = {alpha};
        used = {alpha};
        grow(alpha);
      }
    }
    if (!best) {
      throw Error("not_matching_covered", "NotMatchingCovered: no alternating ear extends G_" +
                                              std::to_string(d.ears.size()));
    }
    for (std::size_t k = 0; k + 1 < best->size(); ++k) in_edges.insert(Edge((*best)[k], (*best)[k + 1]));
    in_vertices.insert(best->begin(), best->end());
    d.ears.push_back(Ear{*best});
  }
  return d;
}

LabeledGraph stage_graph(const OddEarDecomposition& d, std::size_t i) {
  LabeledGraph out;
  auto touch = [&](Vertex v) {
    if (!out.has_vertex(v)) out.add_vertex(v);
  };
  auto link = [&](Vertex a, Vertex b) {
    touch(a);
    touch(b);
    if (a != b && !out.has_edge(a, b)) out.add_edge(a, b);
  };
  for (std::size_t k = 0; k < d.g0.size(); ++k) link(d.g0[k], d.g0[(k + 1) % d.g0.size()]);
  for (std::size_t e = 0; e < i && e < d.ears.size(); ++e) {
    const auto& p = d.ears[e].path;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) link(p[k], p[k + 1]);
  }
  return out;
}

Diagnostics verify_decomposition(const LabeledGraph& g, const Matching& m,
                                 const OddEarDecomposition& d) {
  Diagnostics diag;
  if (!is_perfect_matching(g, m)) diag.add("matching", "m is not a perfect matching of g");

  const auto& c = d.g0;
  std::set<Vertex> cv(c.begin(), c.end());
  if (c.size() < 4 || c.size() % 2 != 0) diag.add("g0", "G0 is not an even cycle");
  if (cv.size() != c.size()) diag.add("g0", "G0 repeats a vertex");
  std::set<Vertex> verts = cv;
  std::set<Edge> edges;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Edge e(c[k], c[(k + 1) % c.size()]);
    if (!g.has_edge(e)) diag.add("g0", "G0 uses non-edge " + to_string(e));
    edges.insert(e);
  }

  auto absolute = [&](std::size_t i) {
    std::set<Vertex> covered;
    for (const Edge& e : m) {
      if (!edges.count(e)) continue;
      covered.insert(e.u);
      covered.insert(e.v);
    }
    if (covered != verts) diag.add("absolute", "absoluteness fails at i=" + std::to_string(i));
  };
  absolute(0);

  for (std::size_t i = 0; i < d.ears.size(); ++i) {
    const auto& p = d.ears[i].path;
    const std::string tag = "ear " + std::to_string(i + 1);
    if (p.size() < 2) {
      diag.add("ear", tag + " empty");
      continue;
    }
    if ((p.size() - 1) % 2 == 0) diag.add("ear", tag + " even");
    std::set<Vertex> pv(p.begin(), p.end());
    if (pv.size() != p.size()) diag.add("ear", tag + " repeats a vertex");
    for (std::size_t k = 0; k < p.size(); ++k) {
      const bool end = k == 0 || k + 1 == p.size();
      if (end != static_cast<bool>(verts.count(p[k]))) {
        diag.add("ear", tag + " meets G_" + std::to_string(i) + " outside its ends");
        break;
      }
    }
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      const Edge e(p[k], p[k + 1]);
      if (!g.has_edge(e)) diag.add("ear", tag + " uses non-edge " + to_string(e));
      if (!edges.insert(e).second) diag.add("ear", tag + " reuses edge " + to_string(e));
    }
    verts.insert(p.begin(), p.end());
    absolute(i + 1);
  }
  if (verts.size() != g.num_vertices() || edges.size() != g.num_edges()) {
    diag.add("spanning", "G_l differs from G");
  }
  return diag;
}

bool GPath::contains(Vertex x) const {
  return std::find(vertices.begin(), vertices.end(), x) != vertices.end();
}

Edge GPath::end_edge(Vertex x) const {
  if (x == a()) return Edge(vertices[0], vertices[1]);
  return Edge(vertices[vertices.size() - 1], vertices[vertices.size() - 2]);
}

GPath make_path(std::vector<Vertex> vertices) {
  if (vertices.front() > vertices.back()) std::reverse(vertices.begin(), vertices.end());
  return GPath{std::move(vertices)};
}

std::vector<GPath> graph_paths(const LabeledGraph& gi) {
  std::set<GPath> out;
  for (const auto& [v, nb] : gi) {
    if (nb.size() != 3) continue;
    for (Vertex n : nb) {
      std::vector<Vertex> seq{v, n};
      while (gi.degree(seq.back()) == 2) {
        const auto& nn = gi.neighbors(seq.back());
        const Vertex prev = seq[seq.size() - 2];
        seq.push_back(nn[0] == prev ? nn[1] : nn[0]);
        if (seq.size() > gi.num_vertices() + 1) break;
      }
      out.insert(make_path(std::move(seq)));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<GPath> paths_at(const std::vector<GPath>& all, Vertex v) {
  std::vector<GPath> out;
  for (const auto& p : all) {
    if (p.has_end(v)) out.push_back(p);
  }
  return out;
}

std::optional<GPath> matching_path_of(const std::vector<GPath>& all, const Matching& m, Vertex v) {
  for (const auto& p : paths_at(all, v)) {
    if (m.count(p.end_edge(v))) return p;
  }
  return std::nullopt;
}

std::vector<VertexPaths> matching_paths(const LabeledGraph& gi, const Matching& m) {
  const auto all = graph_paths(gi);
  std::vector<VertexPaths> out;
  for (const auto& [v, nb] : gi) {
    if (nb.size() != 3) continue;
    VertexPaths vp;
    vp.v = v;
    vp.paths = paths_at(all, v);
    for (const auto& p : vp.paths) vp.pseudo_neighbors.push_back(p.other_end(v));
    if (auto mp = matching_path_of(all, m, v)) vp.matching_path = *mp;
    out.push_back(std::move(vp));
  }
  return out;
}

}  // namespace hexbrace
