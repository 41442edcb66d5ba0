#include "hexbrace/matching.hpp"

#include <deque>
#include <functional>
#include <limits>

namespace hexbrace {

bool is_matching(const LabeledGraph& g, const Matching& m) {
  std::set<Vertex> used;
  for (const Edge& e : m) {
    if (!g.has_edge(e)) return false;
    if (!used.insert(e.u).second || !used.insert(e.v).second) return false;
  }
  return true;
}

bool is_perfect_matching(const LabeledGraph& g, const Matching& m) {
  return is_matching(g, m) && 2 * m.size() == g.num_vertices();
}

namespace {

// Lowest-unmatched-vertex branching shared by search and enumeration.
// `visit` returns false to stop the search.
void branch_matchings(const DenseGraph& d,
                      const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = d.size();
  if (n % 2 != 0) return;
  std::vector<int> mate(n, -1);
  bool stop = false;
  std::function<void(int)> rec = [&](int from) {
    if (stop) return;
    int v = from;
    while (v < n && mate[v] >= 0) ++v;
    if (v == n) {
      if (!visit(mate)) stop = true;
      return;
    }
    for (int u : d.adj[v]) {
      if (mate[u] >= 0) continue;
      mate[v] = u;
      mate[u] = v;
      // Prune when some later unmatched vertex has no free neighbour left.
      bool dead = false;
      for (int w : d.adj[u]) {
        if (mate[w] >= 0) continue;
        bool any = false;
        for (int x : d.adj[w]) {
          if (mate[x] < 0) {
            any = true;
            break;
          }
        }
        if (!any) {
          dead = true;
          break;
        }
      }
      if (!dead) rec(v + 1);
      mate[v] = -1;
      mate[u] = -1;
      if (stop) return;
    }
  };
  rec(0);
}

Matching to_matching(const DenseGraph& d, const std::vector<int>& mate) {
  Matching m;
  for (int i = 0; i < d.size(); ++i) {
    if (i < mate[i]) m.emplace(d.labels[i], d.labels[mate[i]]);
  }
  return m;
}

}  // namespace

std::optional<Matching> find_perfect_matching(const LabeledGraph& g) {
  DenseGraph d(g);
  std::optional<Matching> found;
  branch_matchings(d, [&](const std::vector<int>& mate) {
    found = to_matching(d, mate);
    return false;
  });
  return found;
}

std::vector<Matching> enumerate_perfect_matchings(const LabeledGraph& g,
                                                  std::size_t cap) {
  DenseGraph d(g);
  std::vector<Matching> out;
  branch_matchings(d, [&](const std::vector<int>& mate) {
    if (out.size() == cap) {
      throw Error("cap_exceeded",
                  "more than " + std::to_string(cap) + " perfect matchings");
    }
    out.push_back(to_matching(d, mate));
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------

BipartiteMatcher::BipartiteMatcher(const DenseGraph& g,
                                   const std::vector<bool>& left)
    : g_(g), mate_(g.size(), -1), dist_(g.size(), 0) {
  for (int i = 0; i < g.size(); ++i) {
    if (left[i]) left_vertices_.push_back(i);
  }
}

bool BipartiteMatcher::bfs(const std::vector<bool>& removed) {
  constexpr int kInf = std::numeric_limits<int>::max();
  std::deque<int> q;
  bool found = false;
  for (int u : left_vertices_) {
    if (removed[u]) continue;
    if (mate_[u] < 0) {
      dist_[u] = 0;
      q.push_back(u);
    } else {
      dist_[u] = kInf;
    }
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : g_.adj[u]) {
      if (removed[w]) continue;
      int m = mate_[w];
      if (m < 0) {
        found = true;
      } else if (dist_[m] == kInf) {
        dist_[m] = dist_[u] + 1;
        q.push_back(m);
      }
    }
  }
  return found;
}

bool BipartiteMatcher::dfs(int u, const std::vector<bool>& removed) {
  constexpr int kInf = std::numeric_limits<int>::max();
  for (int w : g_.adj[u]) {
    if (removed[w]) continue;
    int m = mate_[w];
    if (m < 0 || (dist_[m] == dist_[u] + 1 && dfs(m, removed))) {
      mate_[u] = w;
      mate_[w] = u;
      return true;
    }
  }
  dist_[u] = kInf;
  return false;
}

int BipartiteMatcher::max_matching(const std::vector<bool>& removed) {
  std::fill(mate_.begin(), mate_.end(), -1);
  int size = 0;
  while (bfs(removed)) {
    for (int u : left_vertices_) {
      if (!removed[u] && mate_[u] < 0 && dfs(u, removed)) ++size;
    }
  }
  return size;
}

bool perfect_matching_exists_bipartite(const LabeledGraph& g, const Edge& e,
                                       const Edge& f) {
  if (!g.has_edge(e) || !g.has_edge(f)) {
    throw Error("invalid_pair", "forced edge absent");
  }
  if (e.shares_vertex(f)) {
    throw Error("invalid_pair", "forced edges share a vertex");
  }
  auto parts = bipartition_any(g);
  if (!parts.ok()) throw Error("not_bipartite", "graph is not bipartite");
  DenseGraph d(g);
  std::vector<bool> left(d.size()), removed(d.size(), false);
  int live_left = 0, live_right = 0;
  for (int i = 0; i < d.size(); ++i) left[i] = parts.classes->in_a(d.labels[i]);
  for (Vertex x : {e.u, e.v, f.u, f.v}) removed[d.index.at(x)] = true;
  for (int i = 0; i < d.size(); ++i) {
    if (removed[i]) continue;
    (left[i] ? live_left : live_right) += 1;
  }
  if (live_left != live_right) return false;
  BipartiteMatcher matcher(d, left);
  return matcher.max_matching(removed) == live_left;
}

}  // namespace hexbrace
