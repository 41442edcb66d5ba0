#include "hexbrace/json_io.hpp"

#include <sstream>

namespace hexbrace {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("json_format", what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Vertex vertex_of(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    bad("vertex label must be a non-negative integer");
  }
  return j.get<Vertex>();
}

std::vector<Vertex> vertices_of(const Json& j) {
  if (!j.is_array()) bad("expected a list of vertices");
  std::vector<Vertex> out;
  for (const auto& x : j) out.push_back(vertex_of(x));
  return out;
}

Edge edge_of(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("edge must be a two-element list");
  return Edge(vertex_of(j[0]), vertex_of(j[1]));
}

Json pair_json(Vertex a, Vertex b) { return Json::array({a, b}); }

Json expansion_json(const Expansion& e) {
  Json j;
  j["x"] = e.x;
  j["n1"] = e.n1;
  j["n2"] = e.n2;
  j["x1"] = e.x1;
  j["v"] = e.v;
  j["x2"] = e.x2;
  return j;
}

Expansion expansion_of(const Json& j) {
  Expansion e;
  e.x = vertex_of(field(j, "x"));
  e.n1 = vertices_of(field(j, "n1"));
  e.n2 = vertices_of(field(j, "n2"));
  e.x1 = vertex_of(field(j, "x1"));
  e.v = vertex_of(field(j, "v"));
  e.x2 = vertex_of(field(j, "x2"));
  return e;
}

const char* side_of(Vertex label) { return hex_in_x(label) ? "X" : "Y"; }

}  // namespace

Json to_json(const LabeledGraph& g) {
  Json j;
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(pair_json(e.u, e.v));
  j["edges"] = std::move(edges);
  return j;
}

LabeledGraph graph_from_json(const Json& j) {
  LabeledGraph g;
  for (Vertex v : vertices_of(field(j, "vertices"))) g.add_vertex(v);
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) bad("'edges' must be a list");
  for (const auto& e : edges) g.add_edge(edge_of(e));
  return g;
}

Json to_json(const Diagnostics& d) {
  Json out = Json::array();
  for (const auto& v : d.violations) out.push_back({{"clause", v.clause}, {"message", v.message}});
  return out;
}

Json to_json(const BraceResult& r) {
  Json j;
  j["brace"] = r.brace;
  if (!r.brace) {
    j["clause"] = r.clause;
    if (r.pair) j["pair"] = {pair_json(r.pair->first.u, r.pair->first.v), pair_json(r.pair->second.u, r.pair->second.v)};
  }
  j["summary"] = r.describe();
  return j;
}

Json to_json(const HexagonGraph& h) {
  Json j;
  j["source"] = to_json(h.source);
  Json vs = Json::array();
  for (Vertex v : h.graph.vertices()) {
    vs.push_back({{"label", v}, {"source", hex_source(v)}, {"index", hex_index(v)}, {"side", side_of(v)}});
  }
  j["vertices"] = std::move(vs);
  Json es = Json::array();
  for (const auto& [e, c] : h.color) {
    Json x{{"edge", pair_json(e.u, e.v)}, {"color", to_string(c)}};
    if (c == EdgeColor::kWhite) {
      const Edge s = h.source_edge.at(e);
      x["source_edge"] = pair_json(s.u, s.v);
    }
    es.push_back(std::move(x));
  }
  j["edges"] = std::move(es);
  return j;
}

std::string to_dot(const HexagonGraph& h) {
  std::ostringstream out;
  out << "graph hexagon {\n";
  for (Vertex src : h.source_order) {
    out << "  subgraph cluster_" << src << " {\n    label=\"" << src << "\";\n";
    for (Vertex v : h.hexagon(src)) out << "    " << v << ";\n";
    out << "  }\n";
  }
  for (const auto& [e, c] : h.color) {
    const char* colour = c == EdgeColor::kRed ? "red" : c == EdgeColor::kBlue ? "blue" : "black";
    out << "  " << e.u << " -- " << e.v << " [color=" << colour << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json to_json(const BlueMatching& m) {
  Json bits = Json::array();
  for (bool b : m.bits) bits.push_back(b ? 1 : 0);
  return {{"bits", bits}};
}

Json to_json(const DcdcCertificate& c) {
  Json cycles = Json::array();
  for (const auto& cyc : c.cycles) {
    Json arcs = Json::array();
    for (const auto& [a, b] : cyc) arcs.push_back(pair_json(a, b));
    cycles.push_back(std::move(arcs));
  }
  return {{"cycles", cycles}};
}

DcdcCertificate certificate_from_json(const Json& j) {
  DcdcCertificate c;
  const Json& cycles = field(j, "cycles");
  if (!cycles.is_array()) bad("'cycles' must be a list");
  for (const auto& cyc : cycles) {
    if (!cyc.is_array()) bad("each cycle must be a list of arcs");
    std::vector<Arc> arcs;
    for (const auto& a : cyc) {
      if (!a.is_array() || a.size() != 2) bad("arc must be a two-element list");
      arcs.push_back({vertex_of(a[0]), vertex_of(a[1])});
    }
    c.cycles.push_back(std::move(arcs));
  }
  return c;
}

Json to_json(const RotationSystem& r) {
  Json rot = Json::object();
  for (const auto& [v, order] : r.order) rot[std::to_string(v)] = order;
  return {{"rotation", rot}};
}

RotationSystem rotation_from_json(const Json& j) {
  const Json& rot = field(j, "rotation");
  if (!rot.is_object()) bad("'rotation' must map vertices to neighbour lists");
  RotationSystem r;
  for (const auto& [key, order] : rot.items()) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos || key.size() > 9) {
      bad("rotation key '" + key + "' is not a vertex label");
    }
    r.order[static_cast<Vertex>(std::stoul(key))] = vertices_of(order);
  }
  return r;
}

Json to_json(const FaceSet& f) {
  Json faces = Json::array();
  for (const auto& w : f.faces) {
    faces.push_back({{"vertices", w.vertices}, {"length", w.edges.size()}});
  }
  return {{"faces", faces}};
}

Json to_json(const AugmentationStep& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  switch (s.kind) {
    case StepKind::kType1:
      j["edge"] = pair_json(s.edge.u, s.edge.v);
      break;
    case StepKind::kType2:
      j.update(expansion_json(s.first));
      j["w"] = s.w;
      break;
    case StepKind::kExpand:
      j.update(expansion_json(s.first));
      break;
    case StepKind::kType3:
    case StepKind::kType4:
      j["expansions"] = Json::array({expansion_json(s.first), expansion_json(s.second)});
      break;
  }
  return j;
}

AugmentationStep step_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("'kind' must be a string");
  const StepKind k = parse_step_kind(kind.get<std::string>());
  switch (k) {
    case StepKind::kType1: {
      const Edge e = edge_of(field(j, "edge"));
      return AugmentationStep::type1(e.u, e.v);
    }
    case StepKind::kType2:
      return AugmentationStep::type2(expansion_of(j), vertex_of(field(j, "w")));
    case StepKind::kExpand:
      return AugmentationStep::expand(expansion_of(j));
    case StepKind::kType3:
    case StepKind::kType4: {
      const Json& ex = field(j, "expansions");
      if (!ex.is_array() || ex.size() != 2) bad("'expansions' must hold two expansions");
      AugmentationStep s;
      s.kind = k;
      s.first = expansion_of(ex[0]);
      s.second = expansion_of(ex[1]);
      return s;
    }
  }
  bad("unknown step kind");
}

Json to_json(const AugmentationTrace& t) {
  Json j;
  if (t.base.name.empty()) {
    j["base"] = {{"graph", to_json(t.base.inline_graph)}};
  } else {
    j["base"] = {{"name", t.base.name}, {"labels", t.base.labels}};
  }
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  j["steps"] = std::move(steps);
  return j;
}

AugmentationTrace trace_from_json(const Json& j) {
  AugmentationTrace t;
  const Json& base = field(j, "base");
  if (base.contains("graph")) {
    t.base.inline_graph = graph_from_json(base.at("graph"));
  } else {
    const Json& name = field(base, "name");
    if (!name.is_string()) bad("base name must be a string");
    t.base.name = name.get<std::string>();
    if (base.contains("labels")) t.base.labels = vertices_of(base.at("labels"));
  }
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) bad("'steps' must be a list");
  for (const auto& s : steps) t.steps.push_back(step_from_json(s));
  return t;
}

Json to_json(const PipelineReport& r) {
  Json j;
  Json m = Json::array();
  for (const Edge& e : r.matching) m.push_back(pair_json(e.u, e.v));
  j["matching"] = std::move(m);
  Json d;
  d["g0"] = r.decomposition.g0;
  Json ears = Json::array();
  for (const auto& e : r.decomposition.ears) ears.push_back(e.path);
  d["ears"] = std::move(ears);
  j["decomposition"] = std::move(d);
  Json per_ear = Json::array();
  for (const auto& e : r.ears) {
    per_ear.push_back({{"ear", e.ear}, {"configuration", e.configuration}, {"instance", e.instance}, {"steps", e.steps}});
  }
  j["ears"] = std::move(per_ear);
  j["double_augmentations"] = r.double_augmentations;
  j["trace"] = to_json(r.trace);
  return j;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(e.what());
  }
}

}  // namespace hexbrace
