#include "hexbrace/hexagon.hpp"

#include <algorithm>

#include "hexbrace/matching.hpp"

namespace hexbrace {

const char* to_string(EdgeColor c) {
  switch (c) {
    case EdgeColor::kRed:
      return "red";
    case EdgeColor::kBlue:
      return "blue";
    case EdgeColor::kWhite:
      return "white";
  }
  return "?";
}

IndexAssignment canonical_index_assignment(const LabeledGraph& g) {
  IndexAssignment ia;
  for (const auto& [v, nbrs] : g) {
    if (nbrs.size() != 3) {
      throw Error("not_cubic", "NotCubic(" + std::to_string(v) + ", " +
                                   std::to_string(nbrs.size()) + ")");
    }
    std::array<Vertex, 3> sorted{nbrs[0], nbrs[1], nbrs[2]};
    std::sort(sorted.begin(), sorted.end());
    ia[v] = sorted;
  }
  return ia;
}

int HexagonGraph::index_of(Vertex v, Vertex u) const {
  const auto& order = index.at(v);
  for (int i = 0; i < 3; ++i) {
    if (order[i] == u) return i;
  }
  throw Error("missing_edge", "no index for " + to_string(Edge(u, v)));
}

std::array<Vertex, 6> HexagonGraph::hexagon(Vertex v) const {
  std::array<Vertex, 6> out{};
  for (int i = 0; i < 6; ++i) out[i] = hex_label(v, i);
  return out;
}

std::vector<Edge> HexagonGraph::edges_of_color(EdgeColor c) const {
  std::vector<Edge> out;
  for (const auto& [e, col] : color) {
    if (col == c) out.push_back(e);
  }
  return out;
}

HexagonGraph build_hexagon_graph(const LabeledGraph& g) {
  validate_cubic(g);
  return build_hexagon_graph(g, canonical_index_assignment(g));
}

HexagonGraph build_hexagon_graph(const LabeledGraph& g, const IndexAssignment& ia) {
  validate_cubic(g);
  HexagonGraph h;
  h.source = g;
  h.index = ia;
  h.source_order = g.vertices();
  for (Vertex v : h.source_order) {
    auto it = ia.find(v);
    if (it == ia.end()) throw Error("invalid_index", "no index assignment at " + std::to_string(v));
    std::array<Vertex, 3> want{it->second};
    std::array<Vertex, 3> have{g.neighbors(v)[0], g.neighbors(v)[1], g.neighbors(v)[2]};
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have) {
      throw Error("invalid_index", "index assignment at " + std::to_string(v) +
                                       " is not a bijection onto N(v)");
    }
    for (int i = 0; i < 6; ++i) h.graph.add_vertex(hex_label(v, i));
  }
  auto add = [&](Vertex a, Vertex b, EdgeColor c) {
    h.graph.add_edge(a, b);
    h.color[Edge(a, b)] = c;
  };
  for (Vertex v : h.source_order) {
    for (int i = 0; i < 6; ++i) add(hex_label(v, i), hex_label(v, (i + 1) % 6), EdgeColor::kBlue);
    for (int i = 0; i < 3; ++i) add(hex_label(v, i), hex_label(v, i + 3), EdgeColor::kRed);
  }
  for (const Edge& e : g.edges()) {
    const Vertex a = e.u, b = e.v;
    const int i = h.index_of(a, b);
    const int j = h.index_of(b, a);
    Edge first, second;
    if (i % 2 == j % 2) {
      first = Edge(hex_label(a, i), hex_label(b, j + 3));
      second = Edge(hex_label(a, i + 3), hex_label(b, j));
    } else {
      first = Edge(hex_label(a, i), hex_label(b, j));
      second = Edge(hex_label(a, i + 3), hex_label(b, j + 3));
    }
    add(first.u, first.v, EdgeColor::kWhite);
    add(second.u, second.v, EdgeColor::kWhite);
    h.white_of[e] = {first, second};
    h.source_edge[first] = e;
    h.source_edge[second] = e;
  }
  return h;
}

Diagnostics check_hexagon_graph(const HexagonGraph& h) {
  Diagnostics d;
  const std::size_t n = h.source.num_vertices();
  if (h.graph.num_vertices() != 6 * n) d.add("size", "expected 6n vertices");
  if (h.graph.num_edges() != 12 * n) d.add("size", "expected 12n edges");
  for (const auto& [v, nbrs] : h.graph) {
    if (nbrs.size() != 4) d.add("regular", "vertex " + std::to_string(v) + " not of degree 4");
  }
  std::size_t x = 0, y = 0;
  for (Vertex v : h.graph.vertices()) (hex_in_x(v) ? x : y) += 1;
  if (x != 3 * n || y != 3 * n) d.add("bipartite", "|X| and |Y| must both be 3n");
  for (const Edge& e : h.graph.edges()) {
    if (hex_in_x(e.u) == hex_in_x(e.v)) d.add("bipartite", "edge " + to_string(e) + " inside a class");
  }
  for (Vertex v : h.source.vertices()) {
    const auto& order = h.index.at(v);
    if (order[0] == order[1] || order[1] == order[2] || order[0] == order[2]) {
      d.add("index", "indices at " + std::to_string(v) + " not distinct");
    }
    for (int i = 0; i < 6; ++i) {
      const Vertex a = hex_label(v, i);
      if (!h.graph.has_edge(a, hex_label(v, (i + 1) % 6))) d.add("hexagon", "missing blue edge");
      if (i < 3 && !h.graph.has_edge(a, hex_label(v, i + 3))) d.add("hexagon", "missing red edge");
    }
  }
  std::set<Vertex> red_cover, white_cover;
  std::size_t reds = 0, whites = 0;
  for (const Edge& e : h.graph.edges()) {
    const bool same_hex = hex_source(e.u) == hex_source(e.v);
    if (!same_hex) {
      ++whites;
      white_cover.insert(e.u);
      white_cover.insert(e.v);
      const Vertex a = hex_source(e.u), b = hex_source(e.v);
      if (!h.source.has_edge(a, b)) d.add("white", "white edge " + to_string(e) + " has no G-edge");
      // Parity rule.
      const int i = h.index_of(a, b), j = h.index_of(b, a);
      const int ie = hex_index(e.u), je = hex_index(e.v);
      if (ie % 3 != i || je % 3 != j) d.add("white", "white edge " + to_string(e) + " at wrong index");
      const bool same_class = (i % 2) == (j % 2);
      const bool offset = (ie >= 3) != (je >= 3);
      if (same_class != offset) d.add("white", "parity rule broken at " + to_string(e));
      continue;
    }
    const int di = (hex_index(e.v) - hex_index(e.u) + 6) % 6;
    if (di == 3) {
      ++reds;
      red_cover.insert(e.u);
      red_cover.insert(e.v);
    } else if (di != 1 && di != 5) {
      d.add("hexagon", "stray edge " + to_string(e));
    }
  }
  if (reds != 3 * n || red_cover.size() != 6 * n) d.add("red", "red edges are not a perfect matching");
  if (whites != 3 * n || white_cover.size() != 6 * n) d.add("white", "white edges are not a perfect matching");
  for (const auto& [e, c] : h.color) {
    const bool same_hex = hex_source(e.u) == hex_source(e.v);
    const int di = (hex_index(e.v) - hex_index(e.u) + 6) % 6;
    EdgeColor want = !same_hex ? EdgeColor::kWhite : (di == 3 ? EdgeColor::kRed : EdgeColor::kBlue);
    if (c != want) d.add("color", "edge " + to_string(e) + " mis-coloured");
  }
  return d;
}

// ---------------------------------------------------------------------------

std::set<Edge> blue_matching_edges(const HexagonGraph& h, const BlueMatching& m) {
  std::set<Edge> out;
  for (std::size_t k = 0; k < h.source_order.size(); ++k) {
    const Vertex v = h.source_order[k];
    for (int i = 0; i < 6; ++i) {
      out.emplace(hex_label(v, i), hex_label(v, blue_partner(i, m.bits[k])));
    }
  }
  return out;
}

BlueMatching blue_matching_from_index(const HexagonGraph& h, std::uint64_t code) {
  const std::size_t n = h.source_order.size();
  BlueMatching m;
  m.bits.resize(n);
  for (std::size_t k = 0; k < n; ++k) m.bits[k] = (code >> (n - 1 - k)) & 1u;
  return m;
}

std::vector<BlueMatching> blue_matchings(const HexagonGraph& h) {
  const std::size_t n = h.source_order.size();
  if (n > 24) throw Error("too_large", "2^n blue matchings exceed the enumeration limit");
  std::vector<BlueMatching> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    out.push_back(blue_matching_from_index(h, code));
  }
  return out;
}

// ---------------------------------------------------------------------------

Vertex RotationSystem::next(Vertex v, Vertex from) const {
  const auto& cyc = order.at(v);
  for (std::size_t k = 0; k < cyc.size(); ++k) {
    if (cyc[k] == from) return cyc[(k + 1) % cyc.size()];
  }
  throw Error("invalid_rotation", "edge " + to_string(Edge(v, from)) + " not in rotation at " +
                                      std::to_string(v));
}

RotationSystem RotationSystem::normalized() const {
  RotationSystem out;
  for (const auto& [v, cyc] : order) {
    auto c = cyc;
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    out.order[v] = std::move(c);
  }
  return out;
}

RotationSystem matching_to_rotation(const HexagonGraph& h, const BlueMatching& m) {
  RotationSystem r;
  for (std::size_t k = 0; k < h.source_order.size(); ++k) {
    const Vertex v = h.source_order[k];
    const auto& nb = h.index.at(v);
    if (!m.bits[k]) {
      r.order[v] = {nb[0], nb[1], nb[2]};
    } else {
      r.order[v] = {nb[0], nb[2], nb[1]};
    }
  }
  return r;
}

namespace {

void check_rotation(const LabeledGraph& g, const RotationSystem& r) {
  for (const auto& [v, nbrs] : g) {
    auto it = r.order.find(v);
    if (it == r.order.end()) {
      throw Error("invalid_rotation", "no rotation at vertex " + std::to_string(v));
    }
    auto a = it->second;
    auto b = nbrs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b || std::adjacent_find(a.begin(), a.end()) != a.end()) {
      throw Error("invalid_rotation",
                  "rotation at " + std::to_string(v) + " is not a cycle on its incident edges");
    }
  }
  if (r.order.size() != g.num_vertices()) {
    throw Error("invalid_rotation", "rotation defined on extra vertices");
  }
}

}  // namespace

BlueMatching rotation_to_matching(const HexagonGraph& h, const RotationSystem& r) {
  check_rotation(h.source, r);
  BlueMatching m;
  m.bits.resize(h.source_order.size());
  for (std::size_t k = 0; k < h.source_order.size(); ++k) {
    const Vertex v = h.source_order[k];
    const auto& nb = h.index.at(v);
    m.bits[k] = r.next(v, nb[0]) != nb[1];
  }
  return m;
}

std::vector<RotationSystem> all_rotation_systems(const LabeledGraph& g) {
  validate_cubic(g);
  const auto vs = g.vertices();
  const std::size_t n = vs.size();
  if (n > 24) throw Error("too_large", "2^n rotation systems exceed the enumeration limit");
  std::vector<RotationSystem> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    RotationSystem r;
    for (std::size_t k = 0; k < n; ++k) {
      auto nb = g.neighbors(vs[k]);
      std::sort(nb.begin(), nb.end());
      if ((code >> (n - 1 - k)) & 1u) std::swap(nb[1], nb[2]);
      r.order[vs[k]] = nb;
    }
    out.push_back(std::move(r));
  }
  return out;
}

FaceSet trace_faces(const LabeledGraph& g, const RotationSystem& r) {
  check_rotation(g, r);
  std::set<Arc> used;
  FaceSet out;
  for (const Edge& e : g.edges()) {
    for (Arc start : {Arc{e.u, e.v}, Arc{e.v, e.u}}) {
      if (used.count(start)) continue;
      ClosedWalk face;
      Arc dart = start;
      do {
        used.insert(dart);
        face.vertices.push_back(dart.first);
        face.edges.emplace_back(dart.first, dart.second);
        // Arriving at dart.second along the edge from dart.first.
        dart = Arc{dart.second, r.next(dart.second, dart.first)};
      } while (dart != start);
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

int euler_genus(const LabeledGraph& g, const RotationSystem& r) {
  const long f = static_cast<long>(trace_faces(g, r).faces.size());
  const long chi = static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_edges()) + f;
  const long twice = 2 - chi;
  if (twice < 0 || twice % 2 != 0) {
    throw Error("parity", "Euler characteristic " + std::to_string(chi) + " has the wrong parity");
  }
  return static_cast<int>(twice / 2);
}

bool has_no_dual_loop(const LabeledGraph& g, const RotationSystem& r) {
  FaceSet fs = trace_faces(g, r);
  std::map<Edge, std::set<std::size_t>> faces_of;
  for (std::size_t k = 0; k < fs.faces.size(); ++k) {
    for (const Edge& e : fs.faces[k].edges) faces_of[e].insert(k);
  }
  for (const auto& [e, fset] : faces_of) {
    if (fset.size() < 2) return false;
  }
  return true;
}

std::vector<Edge> edge_multiset(const ClosedWalk& w) {
  auto out = w.edges;
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Dense arrays for the M-delta-W walk: position p = 6k + i.
struct WalkTables {
  std::vector<int> white;   // white partner position
  std::vector<Vertex> label;
  std::map<Vertex, int> pos;
};

WalkTables walk_tables(const HexagonGraph& h) {
  WalkTables t;
  const std::size_t n = h.source_order.size();
  t.white.assign(6 * n, -1);
  t.label.resize(6 * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (int i = 0; i < 6; ++i) {
      const Vertex lab = hex_label(h.source_order[k], i);
      t.label[6 * k + i] = lab;
      t.pos[lab] = static_cast<int>(6 * k + i);
    }
  }
  for (const auto& [ge, pair] : h.white_of) {
    for (const Edge& w : pair) {
      t.white[t.pos.at(w.u)] = t.pos.at(w.v);
      t.white[t.pos.at(w.v)] = t.pos.at(w.u);
    }
  }
  return t;
}

int m_partner(int p, const std::vector<bool>& bits) {
  const int k = p / 6, i = p % 6;
  return 6 * k + blue_partner(i, bits[k]);
}

}  // namespace

std::vector<std::vector<Vertex>> mdw_cycles(const HexagonGraph& h, const BlueMatching& m) {
  WalkTables t = walk_tables(h);
  const std::size_t total = t.label.size();
  // Walk in label order so the first unvisited vertex is the cycle minimum.
  std::vector<int> by_label(total);
  for (std::size_t p = 0; p < total; ++p) by_label[p] = static_cast<int>(p);
  std::sort(by_label.begin(), by_label.end(),
            [&](int a, int b) { return t.label[a] < t.label[b]; });
  std::vector<bool> seen(total, false);
  std::vector<std::vector<Vertex>> out;
  for (int s : by_label) {
    if (seen[s]) continue;
    std::vector<Vertex> cyc;
    int p = s;
    bool use_m = true;
    do {
      seen[p] = true;
      cyc.push_back(t.label[p]);
      p = use_m ? m_partner(p, m.bits) : t.white[p];
      use_m = !use_m;
    } while (p != s);
    out.push_back(std::move(cyc));
  }
  return out;
}

ClosedWalk induced_face(const HexagonGraph& h, const std::vector<Vertex>& cycle) {
  ClosedWalk w;
  const std::size_t len = cycle.size();
  for (std::size_t k = 0; k < len; ++k) {
    const Vertex a = cycle[k], b = cycle[(k + 1) % len];
    if (hex_source(a) == hex_source(b)) continue;
    w.vertices.push_back(hex_source(a));
    w.edges.emplace_back(hex_source(a), hex_source(b));
  }
  (void)h;
  return w;
}

SafetyResult is_safe(const HexagonGraph& h, const BlueMatching& m) {
  SafetyResult res;
  for (const auto& cyc : mdw_cycles(h, m)) {
    std::set<Vertex> on(cyc.begin(), cyc.end());
    for (Vertex a : cyc) {
      const Vertex b = hex_label(hex_source(a), (hex_index(a) + 3) % 6);
      if (a < b && on.count(b)) {
        res.safe = false;
        res.red_edge = Edge(a, b);
        res.cycle = cyc;
        return res;
      }
    }
  }
  return res;
}

std::optional<BlueMatching> find_safe_matching_reference(const HexagonGraph& h) {
  const std::size_t n = h.source_order.size();
  if (n > 30) throw Error("too_large", "exhaustive search limited to n <= 30");
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    BlueMatching m = blue_matching_from_index(h, code);
    if (is_safe(h, m).safe) return m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

DcdcCertificate extract_dcdc(const HexagonGraph& h, const BlueMatching& m) {
  if (!is_safe(h, m).safe) throw Error("not_safe", "blue matching is not safe");
  DcdcCertificate cert;
  for (auto cyc : mdw_cycles(h, m)) {
    if (!hex_in_x(cyc[0])) std::reverse(cyc.begin() + 1, cyc.end());
    // From an X start the first step is blue, so white steps run Y -> X.
    std::vector<Arc> arcs;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const Vertex a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      if (hex_source(a) != hex_source(b)) arcs.emplace_back(hex_source(a), hex_source(b));
    }
    cert.cycles.push_back(std::move(arcs));
  }
  return cert;
}

Diagnostics verify_dcdc(const LabeledGraph& g, const DcdcCertificate& cert) {
  Diagnostics d;
  std::map<Arc, int> count;
  for (std::size_t c = 0; c < cert.cycles.size(); ++c) {
    const auto& walk = cert.cycles[c];
    const std::string where = "cycle " + std::to_string(c);
    if (walk.empty()) {
      d.add("closed", where + " is empty");
      continue;
    }
    std::set<Arc> local;
    for (std::size_t k = 0; k < walk.size(); ++k) {
      const Arc& a = walk[k];
      if (walk[(k + 1) % walk.size()].first != a.second) {
        d.add("closed", where + " is not a closed walk at arc " + std::to_string(k));
      }
      if (!g.has_edge(a.first, a.second)) {
        d.add("arc", where + " uses non-edge " + std::to_string(a.first) + "->" +
                         std::to_string(a.second));
      }
      if (!local.insert(a).second) {
        d.add("repeat", where + " repeats arc " + std::to_string(a.first) + "->" +
                            std::to_string(a.second));
      }
      ++count[a];
    }
  }
  for (const Edge& e : g.edges()) {
    const int fwd = count[{e.u, e.v}], bwd = count[{e.v, e.u}];
    if (fwd + bwd == 1) {
      d.add("cover", "edge " + to_string(e) + " covered once");
    } else if (fwd + bwd == 0) {
      d.add("cover", "edge " + to_string(e) + " not covered");
    } else if (fwd != 1 || bwd != 1) {
      d.add("cover", "edge " + to_string(e) + " not covered once in each direction");
    }
  }
  return d;
}

}  // namespace hexbrace
