#include "hexbrace/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace hexbrace {

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

LabeledGraph::LabeledGraph(std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) add_vertex(static_cast<Vertex>(i));
}

LabeledGraph::LabeledGraph(std::size_t n,
                           const std::vector<std::pair<Vertex, Vertex>>& edges)
    : LabeledGraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void LabeledGraph::add_vertex(Vertex v) {
  if (!adj_.emplace(v, std::vector<Vertex>{}).second) {
    throw Error("label_clash", "vertex " + std::to_string(v) + " already present");
  }
}

void LabeledGraph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw Error("loop", "loop edge at " + std::to_string(u));
  auto iu = adj_.find(u);
  auto iv = adj_.find(v);
  if (iu == adj_.end() || iv == adj_.end()) {
    throw Error("missing_vertex", "edge " + to_string(Edge(u, v)) +
                                      " references an absent vertex");
  }
  if (std::find(iu->second.begin(), iu->second.end(), v) != iu->second.end()) {
    throw Error("duplicate_edge", "duplicate edge " + to_string(Edge(u, v)));
  }
  iu->second.push_back(v);
  iv->second.push_back(u);
  ++num_edges_;
}

void LabeledGraph::remove_edge(Vertex u, Vertex v) {
  auto iu = adj_.find(u);
  auto iv = adj_.find(v);
  if (iu == adj_.end() || iv == adj_.end()) {
    throw Error("missing_edge", "edge " + to_string(Edge(u, v)) + " absent");
  }
  auto pu = std::find(iu->second.begin(), iu->second.end(), v);
  if (pu == iu->second.end()) {
    throw Error("missing_edge", "edge " + to_string(Edge(u, v)) + " absent");
  }
  iu->second.erase(pu);
  iv->second.erase(std::find(iv->second.begin(), iv->second.end(), u));
  --num_edges_;
}

void LabeledGraph::remove_vertex(Vertex v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) {
    throw Error("missing_vertex", "vertex " + std::to_string(v) + " absent");
  }
  for (Vertex u : it->second) {
    auto& nu = adj_.at(u);
    nu.erase(std::find(nu.begin(), nu.end(), v));
  }
  num_edges_ -= it->second.size();
  adj_.erase(it);
}

bool LabeledGraph::has_edge(Vertex u, Vertex v) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) return false;
  return std::find(it->second.begin(), it->second.end(), v) != it->second.end();
}

const std::vector<Vertex>& LabeledGraph::neighbors(Vertex v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) {
    throw Error("missing_vertex", "vertex " + std::to_string(v) + " absent");
  }
  return it->second;
}

std::vector<Vertex> LabeledGraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (const auto& [v, nbrs] : adj_) {
    for (Vertex u : nbrs) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Vertex LabeledGraph::max_label() const {
  if (adj_.empty()) throw Error("empty_graph", "graph has no vertices");
  return adj_.rbegin()->first;
}

bool LabeledGraph::same_as(const LabeledGraph& other) const {
  return vertices() == other.vertices() && edges() == other.edges();
}

LabeledGraph LabeledGraph::induced(const std::set<Vertex>& keep) const {
  LabeledGraph out;
  for (Vertex v : keep) {
    if (has_vertex(v)) out.add_vertex(v);
  }
  for (const auto& [v, nbrs] : adj_) {
    if (!keep.count(v)) continue;
    for (Vertex u : nbrs) {
      if (v < u && keep.count(u)) out.add_edge(v, u);
    }
  }
  return out;
}

LabeledGraph LabeledGraph::relabeled(const std::map<Vertex, Vertex>& map) const {
  LabeledGraph out;
  for (const auto& [v, _] : adj_) out.add_vertex(map.at(v));
  for (const auto& [v, nbrs] : adj_) {
    for (Vertex u : nbrs) {
      if (v < u) out.add_edge(map.at(v), map.at(u));
    }
  }
  return out;
}

DenseGraph::DenseGraph(const LabeledGraph& g) {
  labels = g.vertices();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    index[labels[i]] = static_cast<int>(i);
  }
  adj.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (Vertex u : g.neighbors(labels[i])) adj[i].push_back(index.at(u));
    std::sort(adj[i].begin(), adj[i].end());
  }
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Vertex>> connected_components(const LabeledGraph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::set<Vertex> seen;
  for (Vertex s : g.vertices()) {
    if (seen.count(s)) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{s};
    seen.insert(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (seen.insert(u).second) queue.push_back(u);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const LabeledGraph& g) {
  return connected_components(g).size() <= 1;
}

CubicWitness validate_cubic(const LabeledGraph& g) {
  for (const auto& [v, nbrs] : g) {
    if (nbrs.size() != 3) {
      throw Error("not_cubic", "NotCubic(" + std::to_string(v) + ", " +
                                   std::to_string(nbrs.size()) + ")");
    }
  }
  auto comps = connected_components(g);
  if (comps.size() != 1) {
    throw Error("disconnected",
                "Disconnected(" + std::to_string(comps.size()) + ")");
  }
  return {g.num_vertices(), g.num_edges()};
}

std::set<Edge> find_bridges(const LabeledGraph& g) {
  if (!is_connected(g)) throw Error("disconnected", "graph is disconnected");
  DenseGraph d(g);
  const int n = d.size();
  std::vector<int> disc(n, -1), low(n, 0);
  std::set<Edge> bridges;
  int timer = 0;
  // Iterative DFS; the parent edge is skipped by index, which is safe because
  // the graph is simple.
  struct Frame {
    int v;
    int parent;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < d.adj[f.v].size()) {
        int u = d.adj[f.v][f.next++];
        if (u == f.parent) continue;
        if (disc[u] >= 0) {
          low[f.v] = std::min(low[f.v], disc[u]);
        } else {
          disc[u] = low[u] = timer++;
          stack.push_back({u, f.v, 0});
        }
      } else {
        int v = f.v;
        int p = f.parent;
        stack.pop_back();
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) bridges.emplace(d.labels[p], d.labels[v]);
        }
      }
    }
  }
  return bridges;
}

std::set<Edge> find_bridges_bruteforce(const LabeledGraph& g) {
  std::set<Edge> out;
  const std::size_t base = connected_components(g).size();
  for (const Edge& e : g.edges()) {
    LabeledGraph h = g;
    h.remove_edge(e);
    if (connected_components(h).size() > base) out.insert(e);
  }
  return out;
}

namespace {

BipartitionResult two_colour(const LabeledGraph& g) {
  std::map<Vertex, int> colour;
  std::map<Vertex, Vertex> parent;
  Bipartition parts;
  for (Vertex s : g.vertices()) {
    if (colour.count(s)) continue;
    colour[s] = 0;
    parent[s] = s;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex u : g.neighbors(v)) {
        auto it = colour.find(u);
        if (it == colour.end()) {
          colour[u] = 1 - colour[v];
          parent[u] = v;
          queue.push_back(u);
        } else if (it->second == colour[v]) {
          // Walk both tree paths up to their meeting point.
          std::vector<Vertex> pv{v}, pu{u};
          while (parent[pv.back()] != pv.back()) pv.push_back(parent[pv.back()]);
          while (parent[pu.back()] != pu.back()) pu.push_back(parent[pu.back()]);
          while (pv.size() > 1 && pu.size() > 1 &&
                 pv[pv.size() - 2] == pu[pu.size() - 2]) {
            pv.pop_back();
            pu.pop_back();
          }
          BipartitionResult bad;
          bad.odd_cycle = pv;
          for (std::size_t i = pu.size() - 1; i-- > 0;) bad.odd_cycle.push_back(pu[i]);
          return bad;
        }
      }
    }
  }
  for (const auto& [v, c] : colour) {
    (c == 0 ? parts.class_a : parts.class_b).insert(v);
  }
  BipartitionResult ok;
  ok.classes = std::move(parts);
  return ok;
}

}  // namespace

BipartitionResult bipartition(const LabeledGraph& g) {
  if (!is_connected(g)) throw Error("disconnected", "graph is disconnected");
  return two_colour(g);
}

BipartitionResult bipartition_any(const LabeledGraph& g) { return two_colour(g); }

bool is_bipartite(const LabeledGraph& g) { return two_colour(g).ok(); }

// ---------------------------------------------------------------------------

bool is_isomorphism(const LabeledGraph& a, const LabeledGraph& b,
                    const std::map<Vertex, Vertex>& map) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    return false;
  }
  std::set<Vertex> image;
  for (Vertex v : a.vertices()) {
    auto it = map.find(v);
    if (it == map.end() || !b.has_vertex(it->second)) return false;
    image.insert(it->second);
  }
  if (image.size() != a.num_vertices()) return false;
  for (const Edge& e : a.edges()) {
    if (!b.has_edge(map.at(e.u), map.at(e.v))) return false;
  }
  return true;
}

std::optional<std::map<Vertex, Vertex>> find_isomorphism(const LabeledGraph& a,
                                                         const LabeledGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    return std::nullopt;
  }
  DenseGraph da(a), db(b);
  const int n = da.size();
  std::vector<int> da_deg(n), db_deg(n);
  for (int i = 0; i < n; ++i) {
    da_deg[i] = static_cast<int>(da.adj[i].size());
    db_deg[i] = static_cast<int>(db.adj[i].size());
  }
  {
    auto x = da_deg, y = db_deg;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  // Order vertices of `a` by BFS so each new vertex has a mapped neighbour.
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  for (int s = 0; s < n; ++s) {
    if (placed[s]) continue;
    std::deque<int> q{s};
    placed[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      order.push_back(v);
      for (int u : da.adj[v]) {
        if (!placed[u]) {
          placed[u] = true;
          q.push_back(u);
        }
      }
    }
  }
  std::vector<std::vector<bool>> adj_b(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j : db.adj[i]) adj_b[i][j] = true;
  }
  std::vector<int> fwd(n, -1), bwd(n, -1);
  std::function<bool(int)> extend = [&](int k) -> bool {
    if (k == n) return true;
    int v = order[k];
    for (int c = 0; c < n; ++c) {
      if (bwd[c] >= 0 || db_deg[c] != da_deg[v]) continue;
      bool ok = true;
      for (int u : da.adj[v]) {
        if (fwd[u] >= 0 && !adj_b[c][fwd[u]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      // Mapped neighbour counts must agree to keep non-edges non-edges.
      int mapped_a = 0, mapped_b = 0;
      for (int u : da.adj[v]) mapped_a += fwd[u] >= 0;
      for (int u : db.adj[c]) mapped_b += bwd[u] >= 0;
      if (mapped_a != mapped_b) continue;
      fwd[v] = c;
      bwd[c] = v;
      if (extend(k + 1)) return true;
      fwd[v] = -1;
      bwd[c] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  std::map<Vertex, Vertex> out;
  for (int i = 0; i < n; ++i) out[da.labels[i]] = db.labels[fwd[i]];
  return out;
}

}  // namespace hexbrace
