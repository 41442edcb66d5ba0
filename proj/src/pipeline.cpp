#include "hexbrace/pipeline.hpp"

#include <algorithm>
#include <set>

#include "hexbrace/hexagon.hpp"

namespace hexbrace {

namespace {

Vertex square_neighbor(const std::array<Vertex, 4>& s, Vertex a, Vertex not_b) {
  const int j = static_cast<int>(std::find(s.begin(), s.end(), a) - s.begin());
  const Vertex n1 = s[(j + 1) % 4], n2 = s[(j + 3) % 4];
  return n1 == not_b ? n2 : n1;
}

// The one neighbour of x in g outside `known`.
Vertex remaining_neighbor(const LabeledGraph& g, Vertex x, const std::set<Vertex>& known) {
  std::vector<Vertex> rest;
  for (Vertex n : g.neighbors(x)) {
    if (!known.count(n)) rest.push_back(n);
  }
  if (rest.size() != 1) {
    throw Error("configuration", "vertex " + std::to_string(x) + " does not have one outside neighbour");
  }
  return rest.front();
}

struct PairView {
  std::array<Vertex, 4> s;        // the square
  Edge uv;                        // supporting edge of the matched projection
  std::vector<std::pair<Edge, Vertex>> cycle;  // (supporting edge, G-neighbour)
  bool on() const { return cycle[0].first == uv || cycle[1].first == uv; }
  Vertex neighbor_at(const Edge& e) const {
    for (const auto& [f, n] : cycle) {
      if (f == e) return n;
    }
    throw Error("configuration", "no cycle projection on slot " + to_string(e));
  }
};

PairView view(const EarSquareGraph& q, Vertex x, Vertex other) {
  PairView pv;
  pv.s = q.squares.at(x);
  for (const auto& p : q.projections) {
    if (!p.path.has_end(x)) continue;
    const Vertex n = p.path.other_end(x);
    if (n == other) pv.uv = p.support_at(x);
    else pv.cycle.push_back({p.support_at(x), n});
  }
  if (pv.cycle.size() != 2) throw Error("configuration", "square is not of a cubic vertex");
  return pv;
}

}  // namespace

DoubleAugmentation double_augmentation(const EarSquareGraph& q, const LabeledGraph& current, Vertex u,
                                       Vertex v, Vertex& next_label) {
  const Projection* pr = q.find(make_path({u, v}));
  if (!pr) throw Error("configuration", "no projection for " + to_string(Edge(u, v)));
  DoubleAugmentation out;
  PairView pu = view(q, u, v), pv = view(q, v, u);
  if (!pu.on() && pv.on()) {
    std::swap(u, v);
    std::swap(pu, pv);
    out.swapped = true;
  }
  auto partner = [&](Vertex a) {
    for (const Edge& e : pr->edges) {
      if (e.contains(a)) return e.other(a);
    }
    throw Error("configuration", "vertex " + std::to_string(a) + " is not on the matched projection");
  };
  Vertex u0, u1, u2, u3, v0, v1, v2, v3;
  std::vector<AugmentationStep> steps;
  if (!pu.on() && !pv.on()) {
    out.configuration = 'a';
    u3 = std::min(pu.uv.u, pu.uv.v);
    u2 = pu.uv.other(u3);
    v0 = partner(u3);
    v1 = partner(u2);
    if (Edge(v0, v1) != pv.uv) throw Error("configuration", "matched projection is not a K2,2");
    u0 = square_neighbor(pu.s, u3, u2);
    u1 = square_neighbor(pu.s, u2, u3);
    v3 = square_neighbor(pv.s, v0, v1);
    v2 = square_neighbor(pv.s, v1, v0);
    steps = {AugmentationStep::type1(u1, v0), AugmentationStep::type1(u2, v3)};
  } else {
    u1 = std::min(pu.uv.u, pu.uv.v);
    u2 = pu.uv.other(u1);
    v0 = partner(u1);
    u0 = square_neighbor(pu.s, u1, u2);
    u3 = square_neighbor(pu.s, u2, u1);
    if (!pv.on()) {
      out.configuration = 'b';
      v1 = partner(u2);
      v3 = square_neighbor(pv.s, v0, v1);
      v2 = square_neighbor(pv.s, v1, v0);
      steps = {AugmentationStep::type1(u2, v3), AugmentationStep::type1(u3, v0)};
    } else {
      out.configuration = 'c';
      v3 = partner(u2);
      v1 = square_neighbor(pv.s, v0, v3);
      v2 = square_neighbor(pv.s, v3, v0);
      steps = {AugmentationStep::type1(u2, v1), AugmentationStep::type1(u3, v0)};
    }
  }

  LabeledGraph g = current;
  for (const auto& s : steps) apply_step(g, s);

  // Step 1: v0 -> v0^1 (A) v (B) v0^2 (C), then B v2.
  if (g.degree(v0) != 5) throw Error("degree", "expanded vertex v0 has degree " + std::to_string(g.degree(v0)));
  const Vertex z1 = remaining_neighbor(g, v0, {v1, v3, u1, u3});
  Expansion e1{v0, {v1, v3, z1}, {u1, u3}, next_label, next_label + 1, next_label + 2};
  next_label += 3;
  const Vertex A = e1.x1, B = e1.v, C = e1.x2;
  steps.push_back(AugmentationStep::type2(e1, v2));
  apply_step(g, steps.back());
  // Step 2.
  steps.push_back(AugmentationStep::type1(B, u2));
  apply_step(g, steps.back());
  // Step 3: u2 -> u2^1 (D) u (E) u2^2 (F), then E C.
  if (g.degree(u2) != 6) throw Error("degree", "expanded vertex u2 has degree " + std::to_string(g.degree(u2)));
  const Vertex x2 = remaining_neighbor(g, u2, {u1, u3, v1, v3, B});
  Expansion e3{u2, {u1, x2, u3}, {v1, B, v3}, next_label, next_label + 1, next_label + 2};
  next_label += 3;
  const Vertex D = e3.x1, E = e3.v, F = e3.x2;
  steps.push_back(AugmentationStep::type2(e3, C));
  apply_step(g, steps.back());
  // Step 4.
  steps.push_back(AugmentationStep::type1(E, u0));
  apply_step(g, steps.back());

  out.steps = std::move(steps);
  out.hu.source = u;
  out.hu.labels = {u0, u1, u3, D, E, C};
  out.hu.red_by_neighbor = {{pu.neighbor_at(Edge(u3, u0)), Edge(u0, u3)},
                            {pu.neighbor_at(Edge(u1, u2)), Edge(u1, D)},
                            {v, Edge(E, C)}};
  out.hv.source = v;
  out.hv.labels = {v1, v2, v3, A, B, F};
  out.hv.red_by_neighbor = {{pv.neighbor_at(Edge(v1, v2)), Edge(v1, v2)},
                            {pv.neighbor_at(Edge(v3, v0)), Edge(v3, A)},
                            {u, Edge(B, F)}};
  return out;
}

namespace {

void collect_labels(const AugmentationStep& s, std::set<Vertex>& out) {
  auto exp = [&](const Expansion& e) {
    out.insert(e.x);
    out.insert(e.n1.begin(), e.n1.end());
    out.insert(e.n2.begin(), e.n2.end());
    out.insert({e.x1, e.v, e.x2});
  };
  switch (s.kind) {
    case StepKind::kType1:
      out.insert({s.edge.u, s.edge.v});
      break;
    case StepKind::kType2:
      exp(s.first);
      out.insert(s.w);
      break;
    case StepKind::kExpand:
      exp(s.first);
      break;
    case StepKind::kType3:
    case StepKind::kType4:
      exp(s.first);
      exp(s.second);
      break;
  }
}

AugmentationStep rename_step(const AugmentationStep& s, const std::map<Vertex, Vertex>& f) {
  auto r = [&](Vertex x) { return f.at(x); };
  auto rv = [&](std::vector<Vertex> v) {
    for (Vertex& x : v) x = r(x);
    return v;
  };
  auto exp = [&](const Expansion& e) { return Expansion{r(e.x), rv(e.n1), rv(e.n2), r(e.x1), r(e.v), r(e.x2)}; };
  AugmentationStep out = s;
  out.edge = Edge(r(s.edge.u), r(s.edge.v));
  switch (s.kind) {
    case StepKind::kType1:
      out.first = {};
      out.second = {};
      out.w = 0;
      break;
    case StepKind::kType2:
      out.first = exp(s.first);
      out.w = r(s.w);
      out.edge = {};
      break;
    case StepKind::kExpand:
      out.first = exp(s.first);
      out.edge = {};
      break;
    case StepKind::kType3:
    case StepKind::kType4:
      out.first = exp(s.first);
      out.second = exp(s.second);
      out.edge = {};
      break;
  }
  return out;
}

}  // namespace

PipelineReport generate_hexagon_trace(const LabeledGraph& g) {
  validate_cubic(g);
  const auto bridges = find_bridges(g);
  if (!bridges.empty()) {
    throw Error("bridged", "graph has bridge " + to_string(*bridges.begin()));
  }
  PipelineReport rep;
  auto m = find_perfect_matching(g);
  if (!m) throw Error("not_matching_covered", "graph has no perfect matching");
  rep.matching = *m;
  rep.decomposition = odd_ear_decomposition(g, rep.matching);
  const auto& d = rep.decomposition;

  std::vector<AugmentationStep> steps;
  EarStageResult q1 = build_q1(g, rep.matching, d);
  steps = q1.steps;
  rep.ears.push_back({1, 0, q1.instance, q1.steps.size()});
  rep.stages.push_back(q1.q);
  rep.stage_end.push_back(steps.size());
  Vertex next_label = 8;
  for (std::size_t i = 2; i <= d.ears.size(); ++i) {
    const LabeledGraph g_prev = stage_graph(d, i - 1);
    EarStageResult r = extend_ear(rep.stages.back(), g_prev, d.ears[i - 1], rep.matching, next_label);
    steps.insert(steps.end(), r.steps.begin(), r.steps.end());
    rep.ears.push_back({i, r.configuration, r.instance, r.steps.size()});
    rep.stages.push_back(std::move(r.q));
    rep.stage_end.push_back(steps.size());
  }

  const EarSquareGraph& q = rep.stages.back();
  LabeledGraph current = q.graph;
  std::vector<HexagonPiece> pieces;
  for (const Edge& e : rep.matching) {
    DoubleAugmentation da = double_augmentation(q, current, e.u, e.v, next_label);
    for (const auto& s : da.steps) apply_step(current, s);
    steps.insert(steps.end(), da.steps.begin(), da.steps.end());
    pieces.push_back(da.hu);
    pieces.push_back(da.hv);
    ++rep.double_augmentations;
  }

  // Canonical names: hexagon of a gets 6a + i with pair k = (a_k, a_{k+3})
  // toward the rank-k neighbour; every other label used goes above 6n.
  const auto parts = bipartition(current);
  if (!parts.ok()) throw Error("internal", "final graph is not bipartite");
  const auto ia = canonical_index_assignment(g);
  std::map<Vertex, Vertex> rename;
  for (const auto& p : pieces) {
    const auto& order = ia.at(p.source);
    auto xy = [&](const Edge& e) {
      return parts.classes->in_a(e.u) ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
    };
    const auto [x0, y0] = xy(p.red_by_neighbor.at(order[0]));
    const auto [x1, y1] = xy(p.red_by_neighbor.at(order[1]));
    const auto [x2, y2] = xy(p.red_by_neighbor.at(order[2]));
    const Vertex src = p.source;
    rename[x0] = hex_label(src, 0);
    rename[y1] = hex_label(src, 1);
    rename[x2] = hex_label(src, 2);
    rename[y0] = hex_label(src, 3);
    rename[x1] = hex_label(src, 4);
    rename[y2] = hex_label(src, 5);
  }
  std::set<Vertex> used;
  for (Vertex i = 0; i < 8; ++i) used.insert(i);
  for (const auto& s : steps) collect_labels(s, used);
  Vertex spare = static_cast<Vertex>(6 * g.num_vertices());
  for (Vertex x : used) {
    if (!rename.count(x)) rename[x] = spare++;
  }

  rep.trace.base.name = "L8";
  for (Vertex i = 0; i < 8; ++i) rep.trace.base.labels.push_back(rename.at(i));
  for (const auto& s : steps) rep.trace.steps.push_back(rename_step(s, rename));
  for (auto& st : rep.stages) st = st.relabeled(rename);
  return rep;
}

Diagnostics verify_pipeline(const LabeledGraph& g, const PipelineReport& r) {
  Diagnostics diag;
  diag.append(verify_decomposition(g, r.matching, r.decomposition));
  for (const auto& s : r.trace.steps) {
    if (s.kind != StepKind::kType1 && s.kind != StepKind::kType2) {
      diag.add("simple", std::string("step of kind ") + to_string(s.kind));
    }
  }
  std::map<std::size_t, LabeledGraph> snapshots;
  std::set<std::size_t> wanted(r.stage_end.begin(), r.stage_end.end());
  ReplayReport rep;
  try {
    rep = replay_trace(r.trace, [&](std::size_t i, const LabeledGraph& h) {
      if (wanted.count(i)) snapshots[i] = h;
    });
  } catch (const Error& e) {
    diag.add("replay", e.what());
    return diag;
  }
  for (std::size_t i = 0; i < r.stages.size(); ++i) {
    const std::string tag = "Q_" + std::to_string(i + 1);
    if (!snapshots.at(r.stage_end[i]).same_as(r.stages[i].graph)) {
      diag.add("stage", tag + " differs from the replayed graph");
    }
    const auto d = check_ear_square_graph(r.stages[i], stage_graph(r.decomposition, i + 1), r.matching);
    for (const auto& v : d.violations) diag.add("stage", tag + " " + v.clause + ": " + v.message);
  }
  if (!r.stages.empty()) {
    const auto d = check_square_graph(r.stages.back(), g, r.matching);
    for (const auto& v : d.violations) diag.add("square_graph", v.clause + ": " + v.message);
  }
  if (!rep.graph.same_as(build_hexagon_graph(g).graph)) {
    diag.add("final", "replayed graph differs from the hexagon graph");
  }
  return diag;
}

}  // namespace hexbrace
