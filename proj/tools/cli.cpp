#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "hexbrace/brace.hpp"
#include "hexbrace/hexagon.hpp"
#include "hexbrace/io.hpp"
#include "hexbrace/json_io.hpp"
#include "hexbrace/pipeline.hpp"

namespace hexbrace {

namespace {

// Input problems end with exit code 2, everything else with 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LabeledGraph load_graph(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

LabeledGraph load_cubic(const std::string& path) {
  LabeledGraph g = load_graph(path);
  try {
    validate_cubic(g);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
  return g;
}

Json load_json(const std::string& path) {
  try {
    return parse_json_text(read_text_file(path));
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <class F>
auto decode(const std::string& path, F f) {
  try {
    return f(load_json(path));
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void require(const Diagnostics& d, const std::string& what) {
  if (!d.ok()) throw DomainFailure(what + " failed: " + d.summary());
}

struct Options {
  std::string graph, second, output, family;
  std::size_t size = 0;
  int jobs = 1;
  int spot_check = 0;
  bool dot = false;
  bool verify = false;
};

int hexagon_build(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = load_cubic(o.graph);
  const auto h = build_hexagon_graph(g);
  if (o.verify) require(check_hexagon_graph(h), "hexagon check");
  if (o.dot) out << to_dot(h);
  else emit(out, to_json(h));
  err << "hexagon graph: " << h.graph.num_vertices() << " vertices, " << h.graph.num_edges() << " edges\n";
  return 0;
}

int dcdc_find(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = load_cubic(o.graph);
  const auto h = build_hexagon_graph(g);
  const auto m = find_safe_matching(h, o.jobs);
  if (!m) {
    emit(out, {{"safe_matching", nullptr}});
    err << "no safe blue matching\n";
    return 1;
  }
  const auto cert = extract_dcdc(h, *m);
  if (o.verify) {
    if (!is_safe(h, *m).safe) throw DomainFailure("returned matching is not safe");
    require(verify_dcdc(g, cert), "certificate check");
  }
  Json j;
  j["safe_matching"] = to_json(*m);
  j["certificate"] = to_json(cert);
  emit(out, j);
  err << "safe matching found; certificate with " << cert.cycles.size() << " cycles\n";
  return 0;
}

int dcdc_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = load_cubic(o.graph);
  // Accepts the output of `dcdc find` as well as a bare certificate.
  const auto cert = decode(o.second, [](const Json& j) {
    return certificate_from_json(j.contains("certificate") ? j.at("certificate") : j);
  });
  const auto d = verify_dcdc(g, cert);
  emit(out, {{"valid", d.ok()}, {"violations", to_json(d)}});
  err << (d.ok() ? "certificate valid\n" : "certificate invalid: " + d.summary() + "\n");
  return d.ok() ? 0 : 1;
}

int brace_check(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = load_graph(o.graph);
  const auto r = is_brace(g, o.jobs);
  if (o.verify) {
    const auto ref = is_brace_reference(g);
    if (ref.brace != r.brace || ref.pair != r.pair) throw DomainFailure("reference brace check disagrees");
  }
  emit(out, to_json(r));
  err << r.describe() << '\n';
  return r.brace ? 0 : 1;
}

int base(const Options& o, std::ostream& out, std::ostream& err) {
  LabeledGraph g;
  try {
    g = generate_base(parse_base_family(o.family), o.size);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  if (o.verify) {
    const auto r = is_brace(g);
    if (!r.brace) throw DomainFailure("base graph is not a brace: " + r.describe());
  }
  emit(out, to_json(g));
  err << to_string(parse_base_family(o.family)) << ' ' << o.size << ": " << g.num_edges() << " edges\n";
  return 0;
}

int trace_generate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = load_cubic(o.graph);
  const auto rep = generate_hexagon_trace(g);
  if (o.verify) require(verify_pipeline(g, rep), "pipeline check");
  Json j = to_json(rep);
  if (!o.output.empty()) {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw InputError("cannot write " + o.output);
    f << j.at("trace").dump(2) << '\n';
    j.erase("trace");
    j["trace_file"] = o.output;
  }
  emit(out, j);
  err << "trace: " << rep.trace.steps.size() << " steps, " << rep.ears.size() << " ears, "
      << rep.double_augmentations << " double augmentations\n";
  return 0;
}

int trace_replay(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t = decode(o.graph, [](const Json& j) { return trace_from_json(j.contains("trace") ? j.at("trace") : j); });
  Json spots = Json::array();
  bool spots_ok = true;
  ReplayReport rep;
  try {
    rep = replay_trace(t, [&](std::size_t i, const LabeledGraph& h) {
      if (o.spot_check <= 0 || (i % static_cast<std::size_t>(o.spot_check) != 0 && i != t.steps.size())) return;
      const auto r = is_brace(h);
      spots_ok &= r.brace;
      spots.push_back({{"step", i}, {"brace", r.brace}, {"summary", r.describe()}});
    });
  } catch (const Error& e) {
    emit(out, {{"valid", false}, {"error", e.what()}});
    err << e.what() << '\n';
    return 1;
  }
  if (o.verify && !is_bipartite(rep.graph)) throw DomainFailure("replayed graph is not bipartite");
  Json j;
  j["valid"] = true;
  j["vertices"] = rep.graph.num_vertices();
  j["edges"] = rep.graph.num_edges();
  j["graph"] = to_json(rep.graph);
  if (o.spot_check > 0) j["spot_checks"] = std::move(spots);
  if (!o.second.empty()) {
    const bool same = rep.graph.same_as(build_hexagon_graph(load_cubic(o.second)).graph);
    j["matches_hexagon_graph"] = same;
    if (!same) {
      emit(out, j);
      err << "replayed graph differs from the hexagon graph\n";
      return 1;
    }
  }
  emit(out, j);
  err << "replayed " << t.steps.size() << " steps: " << rep.graph.num_vertices() << " vertices, "
      << rep.graph.num_edges() << " edges\n";
  return spots_ok ? 0 : 1;
}

int embed_faces(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = load_cubic(o.graph);
  const auto r = decode(o.second, rotation_from_json);
  FaceSet f;
  int genus = 0;
  try {
    f = trace_faces(g, r);
    genus = euler_genus(g, r);
  } catch (const Error& e) {
    throw InputError(o.second + ": " + e.what());
  }
  if (o.verify) {
    std::map<Edge, int> uses;
    std::size_t total = 0;
    for (const auto& w : f.faces) {
      total += w.edges.size();
      for (const Edge& e : w.edges) ++uses[e];
    }
    bool ok = total == 2 * g.num_edges() && uses.size() == g.num_edges();
    for (const auto& [e, k] : uses) ok &= k == 2;
    if (!ok) throw DomainFailure("face boundaries do not cover every edge twice");
  }
  Json j = to_json(f);
  j["genus"] = genus;
  j["no_dual_loop"] = has_no_dual_loop(g, r);
  emit(out, j);
  err << f.faces.size() << " faces, genus " << genus << '\n';
  return 0;
}

int embed_census(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = load_cubic(o.graph);
  if (g.num_vertices() > 8) throw InputError("census is limited to 8 vertices");
  std::map<int, std::size_t> by_genus, by_faces;
  std::size_t no_dual_loop = 0;
  const auto all = all_rotation_systems(g);
  for (const auto& r : all) {
    ++by_genus[euler_genus(g, r)];
    ++by_faces[static_cast<int>(trace_faces(g, r).faces.size())];
    no_dual_loop += has_no_dual_loop(g, r);
  }
  Json j;
  j["rotation_systems"] = all.size();
  Json bg = Json::object(), bf = Json::object();
  for (const auto& [k, c] : by_genus) bg[std::to_string(k)] = c;
  for (const auto& [k, c] : by_faces) bf[std::to_string(k)] = c;
  j["by_genus"] = bg;
  j["by_faces"] = bf;
  j["min_genus"] = by_genus.begin()->first;
  j["no_dual_loop"] = no_dual_loop;
  if (o.verify) {
    const auto h = build_hexagon_graph(g);
    std::size_t safe = 0;
    for (const auto& m : blue_matchings(h)) safe += is_safe(h, m).safe;
    j["safe_blue_matchings"] = safe;
    if (safe != no_dual_loop) throw DomainFailure("safe matching count differs from no-dual-loop count");
  }
  emit(out, j);
  err << all.size() << " rotation systems, minimum genus " << by_genus.begin()->first << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hexagon graphs, safe matchings, braces and generation traces"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&, std::ostream&)> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, auto fn) {
    CLI::App* c = parent->add_subcommand(name, desc);
    c->add_flag("--verify", o.verify, "re-check the result with the independent checkers");
    c->callback([&action, fn] { action = fn; });
    return c;
  };

  auto* hexagon = app.add_subcommand("hexagon", "hexagon graph construction")->require_subcommand(1);
  auto* hb = leaf(hexagon, "build", "build the hexagon graph of a cubic graph", hexagon_build);
  hb->add_option("graph", o.graph, "edge-list file")->required();
  hb->add_flag("--dot", o.dot, "emit DOT instead of JSON");

  auto* dcdc = app.add_subcommand("dcdc", "directed cycle double covers")->require_subcommand(1);
  auto* df = leaf(dcdc, "find", "search for a safe blue matching and extract a certificate", dcdc_find);
  df->add_option("graph", o.graph, "edge-list file")->required();
  df->add_option("--jobs", o.jobs, "OpenMP workers")->check(CLI::PositiveNumber);
  auto* dv = leaf(dcdc, "verify", "check a certificate", dcdc_verify);
  dv->add_option("graph", o.graph, "edge-list file")->required();
  dv->add_option("certificate", o.second, "certificate JSON")->required();

  auto* brace = app.add_subcommand("brace", "brace tests")->require_subcommand(1);
  auto* bc = leaf(brace, "check", "test whether a graph is a brace", brace_check);
  bc->add_option("graph", o.graph, "edge-list file")->required();
  bc->add_option("--jobs", o.jobs, "OpenMP workers")->check(CLI::PositiveNumber);

  auto* bs = leaf(&app, "base", "generate a base-family graph", base);
  bs->add_option("family", o.family, "moebius_ladder | ladder | biwheel")->required();
  bs->add_option("size", o.size, "vertex count")->required();

  auto* trace = app.add_subcommand("trace", "generation traces")->require_subcommand(1);
  auto* tg = leaf(trace, "generate", "trace from L8 to the hexagon graph", trace_generate);
  tg->add_option("graph", o.graph, "edge-list file")->required();
  tg->add_option("-o,--output", o.output, "write the trace here");
  auto* tr = leaf(trace, "replay", "replay and validate a trace", trace_replay);
  tr->add_option("trace", o.graph, "trace JSON")->required();
  tr->add_option("--spot-check-brace", o.spot_check, "test every K-th intermediate graph for the brace property")
      ->check(CLI::NonNegativeNumber);
  tr->add_option("--against", o.second, "cubic graph whose hexagon graph the replay must equal");

  auto* embed = app.add_subcommand("embed", "rotation systems and faces")->require_subcommand(1);
  auto* ef = leaf(embed, "faces", "trace the faces of a rotation system", embed_faces);
  ef->add_option("graph", o.graph, "edge-list file")->required();
  ef->add_option("rotation", o.second, "rotation JSON")->required();
  auto* ec = leaf(embed, "census", "enumerate all rotation systems", embed_census);
  ec->add_option("graph", o.graph, "edge-list file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }
  try {
    return action(o, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const DomainFailure& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hexbrace
