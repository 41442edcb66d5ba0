#include "hexbrace/augment.hpp"

#include <algorithm>
#include <set>

#include "hexbrace/brace.hpp"

namespace hexbrace {

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::kType1:
      return "type1";
    case StepKind::kType2:
      return "type2";
    case StepKind::kType3:
      return "type3";
    case StepKind::kType4:
      return "type4";
    case StepKind::kExpand:
      return "expand";
  }
  return "?";
}

StepKind parse_step_kind(const std::string& s) {
  if (s == "type1") return StepKind::kType1;
  if (s == "type2") return StepKind::kType2;
  if (s == "type3") return StepKind::kType3;
  if (s == "type4") return StepKind::kType4;
  if (s == "expand") return StepKind::kExpand;
  throw Error("trace_format", "unknown step kind '" + s + "'");
}

AugmentationStep AugmentationStep::type1(Vertex a, Vertex b) {
  AugmentationStep s;
  s.kind = StepKind::kType1;
  s.edge = Edge(a, b);
  return s;
}

AugmentationStep AugmentationStep::type2(Expansion e, Vertex w) {
  AugmentationStep s;
  s.kind = StepKind::kType2;
  s.first = std::move(e);
  s.w = w;
  return s;
}

AugmentationStep AugmentationStep::expand(Expansion e) {
  AugmentationStep s;
  s.kind = StepKind::kExpand;
  s.first = std::move(e);
  return s;
}

LabeledGraph TraceBase::graph() const {
  if (name.empty()) return inline_graph;
  LabeledGraph g = generate_base(name);
  if (labels.empty()) return g;
  if (labels.size() != g.num_vertices()) {
    throw Error("trace_format", "base relabelling has the wrong length");
  }
  std::map<Vertex, Vertex> map;
  for (std::size_t i = 0; i < labels.size(); ++i) map[static_cast<Vertex>(i)] = labels[i];
  if (std::set<Vertex>(labels.begin(), labels.end()).size() != labels.size()) {
    throw Error("trace_format", "base relabelling is not injective");
  }
  return g.relabeled(map);
}

namespace {

// Colour class of v in the component containing it; +1 / -1.
int side(const LabeledGraph& g, Vertex v) {
  auto parts = bipartition_any(g);
  if (!parts.ok()) throw Error("not_bipartite", "graph is not bipartite");
  return parts.classes->in_a(v) ? 1 : -1;
}

bool same_component(const LabeledGraph& g, Vertex a, Vertex b) {
  for (const auto& comp : connected_components(g)) {
    const bool ha = std::binary_search(comp.begin(), comp.end(), a);
    const bool hb = std::binary_search(comp.begin(), comp.end(), b);
    if (ha || hb) return ha && hb;
  }
  return false;
}

void expand_in_place(LabeledGraph& g, const Expansion& e) {
  if (!g.has_vertex(e.x)) throw Error("missing_vertex", "vertex " + std::to_string(e.x) + " absent");
  const auto& nx = g.neighbors(e.x);
  if (nx.size() < 4) {
    throw Error("degree", "vertex " + std::to_string(e.x) + " has degree " +
                              std::to_string(nx.size()) + " < 4");
  }
  if (e.n1.size() < 2 || e.n2.size() < 2) throw Error("partition", "partition class smaller than 2");
  std::set<Vertex> all(nx.begin(), nx.end());
  std::set<Vertex> got(e.n1.begin(), e.n1.end());
  for (Vertex u : e.n2) {
    if (!got.insert(u).second) throw Error("partition", "N1 and N2 overlap");
  }
  if (got != all || e.n1.size() + e.n2.size() != nx.size()) {
    throw Error("partition", "{N1, N2} is not a partition of N(" + std::to_string(e.x) + ")");
  }
  const std::set<Vertex> fresh{e.x1, e.v, e.x2};
  if (fresh.size() != 3) throw Error("label_clash", "new labels not distinct");
  for (Vertex f : fresh) {
    if (g.has_vertex(f)) throw Error("label_clash", "label " + std::to_string(f) + " not fresh");
  }
  g.remove_vertex(e.x);
  g.add_vertex(e.x1);
  g.add_vertex(e.v);
  g.add_vertex(e.x2);
  g.add_edge(e.x1, e.v);
  g.add_edge(e.v, e.x2);
  for (Vertex u : e.n1) g.add_edge(e.x1, u);
  for (Vertex u : e.n2) g.add_edge(e.x2, u);
}

void type1_in_place(LabeledGraph& g, Vertex a, Vertex b) {
  if (!g.has_vertex(a) || !g.has_vertex(b)) throw Error("missing_vertex", "endpoint absent");
  if (g.has_edge(a, b)) throw Error("duplicate_edge", "edge " + to_string(Edge(a, b)) + " exists");
  if (a == b) throw Error("loop", "loop edge");
  if (same_component(g, a, b) && side(g, a) == side(g, b)) {
    throw Error("class", "endpoints of " + to_string(Edge(a, b)) + " are in the same class");
  }
  g.add_edge(a, b);
}

void type2_in_place(LabeledGraph& g, const Expansion& e, Vertex w) {
  if (w == e.x) throw Error("class", "w equals the expanded vertex");
  if (!g.has_vertex(w)) throw Error("missing_vertex", "w absent");
  if (same_component(g, w, e.x) && side(g, w) != side(g, e.x)) {
    throw Error("class", "w=" + std::to_string(w) + " not in the class of x=" + std::to_string(e.x));
  }
  expand_in_place(g, e);
  g.add_edge(e.v, w);
}

void type34_in_place(LabeledGraph& g, const Expansion& ex, const Expansion& ey, StepKind* kind) {
  if (ex.x == ey.x) throw Error("class", "x and y coincide");
  if (same_component(g, ex.x, ey.x) && side(g, ex.x) == side(g, ey.x)) {
    throw Error("class", "x and y are in the same class");
  }
  const StepKind k = g.has_edge(ex.x, ey.x) ? StepKind::kType4 : StepKind::kType3;
  if (kind) *kind = k;
  // The second expansion sees x already replaced; rewrite references to x.
  expand_in_place(g, ex);
  Expansion ey2 = ey;
  auto fix = [&](std::vector<Vertex>& part) {
    for (Vertex& u : part) {
      if (u == ex.x) {
        // Whichever of x1, x2 is now adjacent to y.
        u = g.has_edge(ex.x1, ey.x) ? ex.x1 : ex.x2;
      }
    }
  };
  fix(ey2.n1);
  fix(ey2.n2);
  expand_in_place(g, ey2);
  g.add_edge(ex.v, ey.v);
}

void check_bipartite(const LabeledGraph& g) {
  if (!is_bipartite(g)) throw Error("not_bipartite", "result is not bipartite");
}

}  // namespace

LabeledGraph expand(const LabeledGraph& g, const Expansion& e) {
  LabeledGraph out = g;
  expand_in_place(out, e);
  return out;
}

LabeledGraph augment_type1(const LabeledGraph& g, Vertex u, Vertex v) {
  LabeledGraph out = g;
  type1_in_place(out, u, v);
  check_bipartite(out);
  return out;
}

LabeledGraph augment_type2(const LabeledGraph& g, const Expansion& e, Vertex w) {
  LabeledGraph out = g;
  type2_in_place(out, e, w);
  check_bipartite(out);
  return out;
}

LabeledGraph augment_type3_4(const LabeledGraph& g, const Expansion& ex, const Expansion& ey,
                             StepKind* kind) {
  LabeledGraph out = g;
  type34_in_place(out, ex, ey, kind);
  check_bipartite(out);
  return out;
}

void apply_step(LabeledGraph& g, const AugmentationStep& s) {
  switch (s.kind) {
    case StepKind::kType1:
      type1_in_place(g, s.edge.u, s.edge.v);
      break;
    case StepKind::kType2:
      type2_in_place(g, s.first, s.w);
      break;
    case StepKind::kExpand:
      expand_in_place(g, s.first);
      break;
    case StepKind::kType3:
    case StepKind::kType4: {
      StepKind actual;
      LabeledGraph copy = g;
      type34_in_place(copy, s.first, s.second, &actual);
      if (actual != s.kind) {
        throw Error("kind", std::string("step is ") + to_string(actual) + ", tagged " + to_string(s.kind));
      }
      g = std::move(copy);
      break;
    }
  }
  check_bipartite(g);
}

ReplayReport replay_trace(const AugmentationTrace& t,
                          const std::function<void(std::size_t, const LabeledGraph&)>& observer) {
  ReplayReport rep;
  rep.graph = t.base.graph();
  if (!is_bipartite(rep.graph)) throw Error("invalid_step", "step 0: base graph is not bipartite");
  if (observer) observer(0, rep.graph);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    try {
      apply_step(rep.graph, t.steps[i]);
    } catch (const Error& e) {
      throw Error("invalid_step", "step " + std::to_string(i + 1) + ": " + e.what());
    }
    rep.log.push_back("step " + std::to_string(i + 1) + ": " + to_string(t.steps[i].kind) + " ok, " +
                      std::to_string(rep.graph.num_vertices()) + " vertices, " +
                      std::to_string(rep.graph.num_edges()) + " edges");
    if (observer) observer(i + 1, rep.graph);
  }
  return rep;
}

}  // namespace hexbrace
