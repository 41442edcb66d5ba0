// Construction of ear square graphs by local search.
//
// A target Q_i is assembled directly from Q_{i-1} (old squares and
// supporting edges kept, two new squares attached). The search then runs
// backwards: each move undoes one Type2 step (drop the edge v-w of a new
// vertex v of degree 3 and merge its two other neighbours) followed by the
// Type1 additions that came after it. A reduction that lands exactly on
// Q_{i-1} is replayed forwards as a trace. If none exists, a second pass
// lets window vertices trade roles and accepts any end state that matches
// Q_{i-1} after permuting the window labels.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>

#include "hexbrace/ear_square.hpp"

namespace hexbrace {

namespace {

using Mask = std::uint64_t;
constexpr Mask bit(int i) { return Mask{1} << i; }

struct PlanStep {
  int a = 0, b = 0, mid = 0, w = 0;  // local indices; a keeps its id
  Mask n1 = 0, n2 = 0;               // neighbours of the pieces a and b
  std::vector<std::pair<int, int>> after;  // Type1 edges added after the Type2
};

struct LocalTarget {
  LabeledGraph graph;          // full target graph
  std::set<Vertex> new_ids;    // vertices absent from the old graph
  std::set<Vertex> window;     // old vertices that may be re-expanded
};

struct Synthesized {
  std::vector<AugmentationStep> steps;
  std::map<Vertex, Vertex> label;  // target id -> label after the steps
  LabeledGraph graph;
};

class ReverseSearch {
 public:
  ReverseSearch(const LabeledGraph& before, const LocalTarget& t) : before_(before), t_(t) {
    std::set<Vertex> local(t.window.begin(), t.window.end());
    local.insert(t.new_ids.begin(), t.new_ids.end());
    std::set<Vertex> core = local;
    for (Vertex x : core) {
      for (Vertex n : t.graph.neighbors(x)) local.insert(n);
      if (before.has_vertex(x)) {
        for (Vertex n : before.neighbors(x)) local.insert(n);
      }
    }
    ids_.assign(local.begin(), local.end());
    if (ids_.size() > 64) throw Error("internal", "search window exceeds 64 vertices");
    for (std::size_t i = 0; i < ids_.size(); ++i) index_[ids_[i]] = static_cast<int>(i);
    const int n = static_cast<int>(ids_.size());
    start_.assign(n, 0);
    goal_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      const Vertex x = ids_[i];
      if (t.new_ids.count(x)) is_new_ |= bit(i);
      if (t.window.count(x)) in_window_ |= bit(i);
    }
    core_ = is_new_ | in_window_;
    for (int i = 0; i < n; ++i) {
      const Vertex x = ids_[i];
      for (Vertex y : t.graph.neighbors(x)) {
        const auto it = index_.find(y);
        if (it == index_.end()) continue;
        const int j = it->second;
        if ((core_ & bit(i)) || (core_ & bit(j))) start_[i] |= bit(j);
      }
      if (before.has_vertex(x)) {
        for (Vertex y : before.neighbors(x)) {
          const auto it = index_.find(y);
          if (it == index_.end()) continue;
          const int j = it->second;
          if ((core_ & bit(i)) || (core_ & bit(j))) goal_[i] |= bit(j);
        }
      }
    }
    alive_ = n == 64 ? ~Mask{0} : bit(n) - 1;
  }

  // With `loose`, old window vertices may be merged away and the end state
  // only has to match the goal up to a permutation of the window.
  bool run(int contractions, int deletions, bool loose) {
    loose_ = loose;
    plan_.clear();
    failed_.clear();
    return solve(start_, alive_, contractions, deletions);
  }

  Synthesized forward(Vertex& next_label) const {
    Synthesized out;
    std::map<int, Vertex> fl;
    for (const auto& [i, j] : phi_) fl[i] = ids_[j];
    auto lab = [&](int i) { return fl.at(i); };
    auto labs = [&](Mask m) {
      std::vector<Vertex> v;
      for (int i = 0; m; ++i, m >>= 1) {
        if (m & 1) v.push_back(lab(i));
      }
      return v;
    };
    for (auto [i, j] : bad_) out.steps.push_back(AugmentationStep::type1(lab(i), lab(j)));
    for (auto it = plan_.rbegin(); it != plan_.rend(); ++it) {
      const PlanStep& s = *it;
      Expansion e;
      e.x = lab(s.a);
      e.n1 = labs(s.n1);
      e.n2 = labs(s.n2);
      e.x1 = next_label++;
      e.v = next_label++;
      e.x2 = next_label++;
      const Vertex w = lab(s.w);
      fl[s.a] = e.x1;
      fl[s.mid] = e.v;
      fl[s.b] = e.x2;
      out.steps.push_back(AugmentationStep::type2(e, w));
      for (auto [i, j] : s.after) out.steps.push_back(AugmentationStep::type1(lab(i), lab(j)));
    }
    for (Vertex x : t_.graph.vertices()) {
      auto it = index_.find(x);
      out.label[x] = it == index_.end() ? x : fl.at(it->second);
    }
    out.graph = before_;
    for (const auto& s : out.steps) apply_step(out.graph, s);
    return out;
  }

 private:
  using Adj = std::vector<Mask>;

  bool solve(const Adj& adj, Mask alive, int c, int d) {
    // Old-old edges outside the goal can only disappear through deletions.
    int extra = 0;
    for (int i = 0; i < static_cast<int>(adj.size()); ++i) {
      if (!(alive & bit(i)) || (is_new_ & bit(i))) continue;
      extra += std::popcount(adj[i] & ~goal_[i] & ~is_new_ & alive);
    }
    extra /= 2;
    if (!loose_ && extra > d) return false;
    if (c == 0) return finish(adj, alive, d);

    Adj key = adj;
    key.push_back(alive);
    key.push_back(static_cast<Mask>(c) << 8 | static_cast<Mask>(d));
    if (failed_.count(key)) return false;

    for (int mid = 0; mid < static_cast<int>(adj.size()); ++mid) {
      if (!(alive & bit(mid)) || !((loose_ ? core_ : is_new_) & bit(mid))) continue;
      const int deg = std::popcount(adj[mid]);
      if (deg != 3 && !(deg == 4 && d > 0)) continue;
      std::vector<int> ts{-1};
      if (deg == 4) {
        ts.clear();
        for (int t = 0; t < static_cast<int>(adj.size()); ++t) {
          if (adj[mid] & bit(t)) ts.push_back(t);
        }
      }
      for (int t : ts) {
        const Mask nb = t < 0 ? adj[mid] : adj[mid] & ~bit(t);
        for (int w = 0; w < static_cast<int>(adj.size()); ++w) {
          if (!(nb & bit(w))) continue;
          std::vector<int> ab;
          for (int k = 0; k < static_cast<int>(adj.size()); ++k) {
            if ((nb & bit(k)) && k != w) ab.push_back(k);
          }
          int a = ab[0], b = ab[1];
          const bool old_a = !(is_new_ & bit(a)), old_b = !(is_new_ & bit(b));
          if (old_b) std::swap(a, b);
          if (!(core_ & bit(a)) || !(core_ & bit(b))) continue;
          if (old_a && old_b && !loose_) continue;
          const Mask na = adj[a] & ~bit(mid), nbm = adj[b] & ~bit(mid);
          const Mask common = na & nbm;
          const int k = std::popcount(common);
          const int used = (t >= 0) + k;
          if (used > d) continue;
          std::vector<int> cs;
          for (int i = 0; i < static_cast<int>(adj.size()); ++i) {
            if (common & bit(i)) cs.push_back(i);
          }
          for (unsigned choice = 0; choice < (1u << k); ++choice) {
            Mask n1 = na, n2 = nbm;
            PlanStep step;
            step.a = a;
            step.b = b;
            step.mid = mid;
            step.w = w;
            if (t >= 0) step.after.push_back({mid, t});
            for (int q = 0; q < k; ++q) {
              if (choice & (1u << q)) {
                n1 &= ~bit(cs[q]);
                step.after.push_back({a, cs[q]});
              } else {
                n2 &= ~bit(cs[q]);
                step.after.push_back({b, cs[q]});
              }
            }
            if (std::popcount(n1) < 2 || std::popcount(n2) < 2) continue;
            step.n1 = n1;
            step.n2 = n2;
            Adj next = adj;
            for (int i = 0; i < static_cast<int>(next.size()); ++i) next[i] &= ~bit(mid) & ~bit(b);
            next[mid] = 0;
            next[b] = 0;
            next[a] = n1 | n2;
            for (int i = 0; i < static_cast<int>(next.size()); ++i) {
              if ((n1 | n2) & bit(i)) next[i] |= bit(a);
              else next[i] &= ~bit(a);
            }
            plan_.push_back(step);
            if (solve(next, alive & ~bit(mid) & ~bit(b), c - 1, d - used)) return true;
            plan_.pop_back();
          }
        }
      }
    }
    failed_.insert(std::move(key));
    return false;
  }

  bool finish(const Adj& adj, Mask alive, int d) {
    if (loose_) return finish_loose(adj, alive, d);
    if (alive & is_new_) return false;
    phi_.clear();
    for (int i = 0; i < static_cast<int>(adj.size()); ++i) {
      if (alive & bit(i)) phi_[i] = i;
    }
    bad_.clear();
    for (int i = 0; i < static_cast<int>(adj.size()); ++i) {
      if (!(alive & bit(i))) continue;
      if ((goal_[i] & ~adj[i]) != 0) return false;
      const Mask extra = adj[i] & ~goal_[i];
      for (int j = i + 1; j < static_cast<int>(adj.size()); ++j) {
        if (extra & bit(j)) bad_.push_back({i, j});
      }
    }
    return static_cast<int>(bad_.size()) == d;
  }

  // Assigns the surviving window and new vertices to the old window slots.
  bool finish_loose(const Adj& adj, Mask alive, int d) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> dom, rng;
    for (int i = 0; i < n; ++i) {
      if ((alive & bit(i)) && (core_ & bit(i))) dom.push_back(i);
      if (in_window_ & bit(i)) rng.push_back(i);
    }
    if (dom.size() != rng.size()) return false;
    const Mask fixed = alive & ~core_;
    std::vector<int> to(n, -1);
    for (int i = 0; i < n; ++i) {
      if (fixed & bit(i)) to[i] = i;
    }
    Mask used = 0;
    // Image of a mask of already-assigned vertices.
    auto image = [&](Mask m) {
      Mask out = 0;
      for (int i = 0; m; ++i, m >>= 1) {
        if ((m & 1) && to[i] >= 0) out |= bit(to[i]);
      }
      return out;
    };
    std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
      if (k == dom.size()) {
        bad_.clear();
        for (int i = 0; i < n; ++i) {
          if (!(alive & bit(i))) continue;
          const Mask img = image(adj[i]);
          if ((goal_[to[i]] & ~img) != 0) return false;
          const Mask extra = img & ~goal_[to[i]];
          for (int j = 0; j < n; ++j) {
            if ((extra & bit(j)) && to[i] < j) bad_.push_back({to[i], j});
          }
        }
        if (static_cast<int>(bad_.size()) != d) return false;
        phi_.clear();
        for (int i = 0; i < n; ++i) {
          if (alive & bit(i)) phi_[i] = to[i];
        }
        // bad_ is in goal indices; forward() labels by surviving index.
        std::map<int, int> inv;
        for (const auto& [i, j] : phi_) inv[j] = i;
        for (auto& [a, b] : bad_) a = inv.at(a), b = inv.at(b);
        return true;
      }
      const int x = dom[k];
      for (int r : rng) {
        if (used & bit(r)) continue;
        if (std::popcount(goal_[r]) > std::popcount(adj[x])) continue;
        // Fixed neighbours must agree up to extra edges.
        if ((goal_[r] & fixed & ~image(adj[x] & fixed)) != 0) continue;
        to[x] = r;
        used |= bit(r);
        if (assign(k + 1)) return true;
        used &= ~bit(r);
        to[x] = -1;
      }
      return false;
    };
    return assign(0);
  }

  const LabeledGraph& before_;
  const LocalTarget& t_;
  std::vector<Vertex> ids_;
  std::map<Vertex, int> index_;
  Adj start_, goal_;
  Mask alive_ = 0, is_new_ = 0, in_window_ = 0, core_ = 0;
  std::vector<PlanStep> plan_;
  std::vector<std::pair<int, int>> bad_;
  std::map<int, int> phi_;  // surviving local index -> index of its old role
  bool loose_ = false;
  std::set<Adj> failed_;
};

std::optional<Synthesized> synthesize(const LabeledGraph& before, const LocalTarget& t,
                                      Vertex& next_label) {
  const long dv = static_cast<long>(t.graph.num_vertices()) - static_cast<long>(before.num_vertices());
  const long de = static_cast<long>(t.graph.num_edges()) - static_cast<long>(before.num_edges());
  if (dv < 0 || dv % 2 != 0 || static_cast<std::size_t>(dv) != t.new_ids.size()) return std::nullopt;
  const int contractions = static_cast<int>(dv / 2);
  const int deletions = static_cast<int>(de - 3 * contractions);
  if (deletions < 0) return std::nullopt;
  ReverseSearch rs(before, t);
  if (!rs.run(contractions, deletions, false) && !rs.run(contractions, deletions, true)) return std::nullopt;
  Vertex probe = next_label;
  Synthesized s = rs.forward(probe);
  LabeledGraph want = t.graph.relabeled(s.label);
  if (!s.graph.same_as(want)) throw Error("internal", "synthesized steps do not reach the target");
  next_label = probe;
  return s;
}

// Temporary ids for the eight new square vertices of a target.
constexpr Vertex kTemp = 0x80000000u;

std::map<Vertex, int> classes_of(const LabeledGraph& g) {
  auto parts = bipartition_any(g);
  if (!parts.ok()) throw Error("not_bipartite", "square graph is not bipartite");
  std::map<Vertex, int> c;
  for (Vertex v : g.vertices()) c[v] = parts.classes->in_a(v) ? 0 : 1;
  return c;
}

// The two edges joining supporting edges e and f by class.
std::array<Edge, 2> join(const Edge& e, const Edge& f, const std::map<Vertex, int>& cls) {
  const Vertex f_opp_u = cls.at(f.u) != cls.at(e.u) ? f.u : f.v;
  const Vertex f_opp_v = f_opp_u == f.u ? f.v : f.u;
  return {Edge(e.u, f_opp_u), Edge(e.v, f_opp_v)};
}

Edge slot(const std::array<Vertex, 4>& s, int k) { return Edge(s[k % 4], s[(k + 1) % 4]); }

// Projection of p in q_prev whose path contains x as an interior vertex.
const Projection* carrier(const EarSquareGraph& q, Vertex x) {
  for (const auto& p : q.projections) {
    if (p.path.contains(x) && !p.path.has_end(x)) return &p;
  }
  return nullptr;
}

}  // namespace

EarStageResult extend_ear(const EarSquareGraph& q_prev, const LabeledGraph& g_prev, const Ear& ear,
                          const Matching& m, Vertex& next_label) {
  if (ear.length() % 2 == 0) throw Error("even_ear", "ear has even length");
  const Vertex u = ear.alpha(), v = ear.beta();
  const Projection* p1 = carrier(q_prev, u);
  const Projection* p2 = carrier(q_prev, v);
  if (!p1 || !p2) throw Error("internal", "ear ends are not interior to projected paths");

  LabeledGraph gi = g_prev;
  for (std::size_t k = 0; k + 1 < ear.path.size(); ++k) {
    for (Vertex x : {ear.path[k], ear.path[k + 1]}) {
      if (!gi.has_vertex(x)) gi.add_vertex(x);
    }
    gi.add_edge(ear.path[k], ear.path[k + 1]);
  }
  const auto paths = graph_paths(gi);
  const GPath pi = make_path(ear.path);

  EarStageResult r;
  r.configuration = classify_configuration(q_prev, *p1, *p2);

  // Instance tag.
  const GPath mu = *matching_path_of(paths, m, u);
  const GPath mv = *matching_path_of(paths, m, v);
  if (r.configuration == 9) {
    const auto& pv = p1->path.vertices;
    const auto iu = std::find(pv.begin(), pv.end(), u) - pv.begin();
    const auto iv = std::find(pv.begin(), pv.end(), v) - pv.begin();
    const Vertex x = iu < iv ? p1->path.a() : p1->path.b();
    const Vertex y = p1->path.other_end(x);
    const bool ux = mu.other_end(u) == x && !mu.has_end(v);
    const bool vy = mv.other_end(v) == y && !mv.has_end(u);
    r.instance = ux ? (vy ? "i'" : "ii'") : (vy ? "iii'" : "iv'");
  } else {
    Vertex x = p1->path.a(), y = p1->path.b(), w = p2->path.a(), z = p2->path.b();
    if (p2->path.has_end(y) && !p2->path.has_end(x)) std::swap(x, y);
    if (p2->path.has_end(x) && w != x) std::swap(w, z);
    const bool ux = mu.other_end(u) == x;
    const bool vw = mv.other_end(v) == w;
    r.instance = ux ? (vw ? "iv" : "ii") : (vw ? "iii" : "i");
  }

  const auto cls = classes_of(q_prev.graph);
  std::set<Vertex> window;
  for (Vertex end : {p1->path.a(), p1->path.b(), p2->path.a(), p2->path.b()}) {
    for (Vertex x : q_prev.squares.at(end)) window.insert(x);
  }

  // Supporting edge kept at each old end of a new path.
  auto old_support = [&](const GPath& p, Vertex end) -> Edge {
    for (const Projection* c : {p1, p2}) {
      if (!c->path.has_end(end)) continue;
      const auto& cv = c->path.vertices;
      const auto& pv = p.vertices;
      // p is the piece of c that starts at `end`.
      const Vertex next = pv.front() == end ? pv[1] : pv[pv.size() - 2];
      const Vertex cnext = cv.front() == end ? cv[1] : cv[cv.size() - 2];
      if (next == cnext) return c->support_at(end);
    }
    throw Error("internal", "no old supporting edge for a new path");
  };

  const std::array<Vertex, 4> su{kTemp + 0, kTemp + 1, kTemp + 2, kTemp + 3};
  const std::array<Vertex, 4> sv{kTemp + 4, kTemp + 5, kTemp + 6, kTemp + 7};
  std::map<Vertex, int> tcls = cls;
  for (int j = 0; j < 4; ++j) {
    tcls[su[j]] = j % 2;
    tcls[sv[j]] = j % 2;
  }

  for (int ku = 0; ku < 4; ++ku) {
    for (int kv = 0; kv < 4; ++kv) {
      auto new_slot = [&](Vertex end, const GPath& p) -> Edge {
        const auto& s = end == u ? su : sv;
        const int km = end == u ? ku : kv;
        if (p == pi) return slot(s, 0);
        if (p == (end == u ? mu : mv)) return slot(s, km);
        return slot(s, 2);
      };
      EarSquareGraph t;
      t.graph = q_prev.graph;
      for (const Projection* c : {p1, p2}) {
        for (const Edge& e : c->edges) {
          if (t.graph.has_edge(e)) t.graph.remove_edge(e);
        }
      }
      t.squares = q_prev.squares;
      t.squares[u] = su;
      t.squares[v] = sv;
      for (const auto& s : {su, sv}) {
        for (Vertex x : s) t.graph.add_vertex(x);
        for (int j = 0; j < 4; ++j) t.graph.add_edge(slot(s, j));
      }
      bool ok = true;
      for (const auto& p : paths) {
        if (const Projection* old = q_prev.find(p); old && old != p1 && old != p2) {
          t.projections.push_back(*old);
          continue;
        }
        auto support = [&](Vertex end) { return end == u || end == v ? new_slot(end, p) : old_support(p, end); };
        Projection pr;
        pr.path = p;
        pr.support_a = support(p.a());
        pr.support_b = support(p.b());
        pr.edges = join(pr.support_a, pr.support_b, tcls);
        for (const Edge& e : pr.edges) {
          if (t.graph.has_edge(e)) ok = false;
          else t.graph.add_edge(e);
        }
        t.projections.push_back(pr);
        if (!ok) break;
      }
      if (!ok) continue;
      std::sort(t.projections.begin(), t.projections.end(),
                [](const Projection& a, const Projection& b) { return a.path < b.path; });
      if (!check_ear_square_graph(t, gi, m).ok()) continue;
      LocalTarget lt{t.graph, std::set<Vertex>(su.begin(), su.end()), window};
      lt.new_ids.insert(sv.begin(), sv.end());
      if (auto s = synthesize(q_prev.graph, lt, next_label)) {
        r.q = t.relabeled(s->label);
        r.steps = std::move(s->steps);
        return r;
      }
    }
  }
  throw Error("no_construction", "no simple-augmentation construction found for configuration " +
                                     std::to_string(r.configuration) + " instance " + r.instance);
}

BasicSquareResult basic_square_construction(const LabeledGraph& q, const Edge& e_a, const Edge& e_b,
                                            const Edge& e_c, const Edge& e_d, Vertex& next_label) {
  const auto cls = classes_of(q);
  auto present = [&](const Edge& e, const Edge& f) {
    const auto j = join(e, f, cls);
    return q.has_edge(j[0]) && q.has_edge(j[1]);
  };
  for (const Edge& e : {e_a, e_b, e_c, e_d}) {
    if (!q.has_edge(e)) throw Error("pattern", "distinguished edge " + to_string(e) + " missing");
  }
  if (!present(e_a, e_b) || !present(e_c, e_d)) {
    throw Error("pattern", "distinguished edges are not joined in pairs by K2,2 projections");
  }
  const auto jab = join(e_a, e_b, cls), jcd = join(e_c, e_d, cls);
  const std::set<Edge> joins{jab[0], jab[1], jcd[0], jcd[1]};
  if (joins.size() != 4) throw Error("pattern", "the two projections share an edge");
  const std::array<Edge, 4> given{e_a, e_b, e_c, e_d};
  const std::array<Vertex, 4> s1{kTemp + 0, kTemp + 1, kTemp + 2, kTemp + 3};
  const std::array<Vertex, 4> s2{kTemp + 4, kTemp + 5, kTemp + 6, kTemp + 7};
  std::map<Vertex, int> tcls = cls;
  for (int j = 0; j < 4; ++j) {
    tcls[s1[j]] = j % 2;
    tcls[s2[j]] = j % 2;
  }
  LocalTarget lt;
  lt.graph = q;
  for (const auto& [e, f] : {std::pair{e_a, e_b}, std::pair{e_c, e_d}}) {
    for (const Edge& x : join(e, f, cls)) lt.graph.remove_edge(x);
  }
  for (const auto& s : {s1, s2}) {
    for (Vertex x : s) {
      lt.graph.add_vertex(x);
      lt.new_ids.insert(x);
    }
    for (int j = 0; j < 4; ++j) lt.graph.add_edge(slot(s, j));
  }
  std::vector<std::pair<Edge, Edge>> links{{slot(s1, 0), e_a}, {slot(s1, 2), e_b}, {slot(s2, 0), e_c},
                                           {slot(s2, 2), e_d}, {slot(s1, 1), slot(s2, 1)}};
  for (const auto& [e, f] : links) {
    for (const Edge& x : join(e, f, tcls)) {
      if (lt.graph.has_edge(x)) throw Error("pattern", "output would contain a multiple edge");
      lt.graph.add_edge(x);
    }
  }
  for (const Edge& e : {e_a, e_b, e_c, e_d}) {
    lt.window.insert(e.u);
    lt.window.insert(e.v);
  }
  auto s = synthesize(q, lt, next_label);
  if (!s) throw Error("pattern", "no simple-augmentation sequence reaches the output pattern");
  BasicSquareResult out;
  out.graph = s->graph;
  out.steps = s->steps;
  for (int j = 0; j < 4; ++j) {
    out.square1[j] = s->label.at(s1[j]);
    out.square2[j] = s->label.at(s2[j]);
  }
  for (int j = 0; j < 4; ++j) out.distinguished[j] = Edge(s->label.at(given[j].u), s->label.at(given[j].v));
  return out;
}

}  // namespace hexbrace
