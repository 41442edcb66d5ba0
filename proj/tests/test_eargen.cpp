#include <functional>
#include <set>
#include "doctest.h"
#include "hexbrace/brace.hpp"
#include "hexbrace/corpus.hpp"
#include "hexbrace/hexagon.hpp"
#include "hexbrace/pipeline.hpp"

using namespace hexbrace;

namespace {

std::string error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

struct Stage1 {
  Matching m;
  OddEarDecomposition d;
  EarStageResult r;
};

Stage1 stage1(const LabeledGraph& g) {
  Stage1 s;
  s.m = *find_perfect_matching(g);
  s.d = odd_ear_decomposition(g, s.m);
  s.r = build_q1(g, s.m, s.d);
  return s;
}

// True when e, f and the two edges between them form a 4-cycle of g.
bool joined(const LabeledGraph& g, const Edge& e, const Edge& f) {
  if (!g.has_edge(e) || !g.has_edge(f)) return false;
  return (g.has_edge(e.u, f.u) && g.has_edge(e.v, f.v)) || (g.has_edge(e.u, f.v) && g.has_edge(e.v, f.u));
}

bool is_four_cycle(const LabeledGraph& g, const std::array<Vertex, 4>& s) {
  for (int j = 0; j < 4; ++j) {
    if (!g.has_edge(s[j], s[(j + 1) % 4])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("first stage: L8 plus two edges") {
  for (const auto& [name, g] : corpus::bridgeless()) {
    CAPTURE(name);
    const auto s = stage1(g);
    CHECK(s.r.steps.size() == 2);
    for (const auto& st : s.r.steps) CHECK(st.kind == StepKind::kType1);
    CHECK(s.r.q.graph.num_vertices() == 8);
    CHECK(s.r.q.graph.num_edges() == 14);
    const auto diag = check_ear_square_graph(s.r.q, stage_graph(s.d, 1), s.m);
    CHECK_MESSAGE(diag.ok(), diag.summary());
    LabeledGraph h = generate_base(BaseFamily::kLadder, 8);
    for (const auto& st : s.r.steps) apply_step(h, st);
    CHECK(h.same_as(s.r.q.graph));
  }
}

TEST_CASE("first stage step lists per case") {
  // K3,3 lands in case 1, K4 in case 2'.
  const auto a = stage1(corpus::k33());
  CHECK(a.r.instance == "1");
  CHECK(a.r.steps == std::vector<AugmentationStep>{AugmentationStep::type1(4, 2), AugmentationStep::type1(7, 1)});

  const auto b = stage1(corpus::k4());
  CHECK(b.r.instance == "2'");
  for (const auto& st : b.r.steps) CHECK(st.kind == StepKind::kType1);
  // The matched path's projection is the pair of added edges in case 2.
  const auto c = stage1(corpus::petersen());
  CHECK((c.r.instance == "2" || c.r.instance == "2'"));
}

TEST_CASE("checker reports overlapping projections") {
  const auto s = stage1(corpus::k4());
  auto q = s.r.q;
  REQUIRE(q.projections.size() == 3);
  q.projections[1].edges = q.projections[0].edges;
  const auto diag = check_ear_square_graph(q, stage_graph(s.d, 1), s.m);
  CHECK(diag.has_clause("2(c)"));
}

TEST_CASE("checker reports a broken degree pattern") {
  const auto s = stage1(corpus::k4());
  auto q = s.r.q;
  // An extra edge between two degree-3 vertices of different classes.
  const auto parts = bipartition(q.graph);
  REQUIRE(parts.ok());
  bool added = false;
  for (Vertex a : q.graph.vertices()) {
    for (Vertex b : q.graph.vertices()) {
      if (added || a >= b || q.graph.has_edge(a, b)) continue;
      if (parts.classes->in_a(a) == parts.classes->in_a(b)) continue;
      if (q.graph.degree(a) != 3 || q.graph.degree(b) != 3) continue;
      q.graph.add_edge(a, b);
      added = true;
    }
  }
  REQUIRE(added);
  CHECK(!check_ear_square_graph(q, stage_graph(s.d, 1), s.m).ok());
}

TEST_CASE("classification is total on every stage and agrees with end counts") {
  for (const auto& [name, g] : corpus::bridgeless()) {
    CAPTURE(name);
    const auto rep = generate_hexagon_trace(g);
    for (const auto& q : rep.stages) {
      for (const auto& p1 : q.projections) {
        for (const auto& p2 : q.projections) {
          int c = 0;
          CHECK_NOTHROW(c = classify_configuration(q, p1, p2));
          const std::set<Vertex> ends{p1.path.a(), p1.path.b(), p2.path.a(), p2.path.b()};
          if (p1.path == p2.path) CHECK(c == 9);
          else if (ends.size() == 4) CHECK(c == 1);
          else if (ends.size() == 3) CHECK((c >= 2 && c <= 4));
          else CHECK((c >= 5 && c <= 8));
        }
      }
    }
  }
}

TEST_CASE("shared end with one common support vertex is configuration 2") {
  bool seen = false;
  for (const auto& [name, g] : corpus::bridgeless()) {
    const auto rep = generate_hexagon_trace(g);
    for (const auto& q : rep.stages) {
      for (const auto& p1 : q.projections) {
        for (const auto& p2 : q.projections) {
          const std::set<Vertex> ends{p1.path.a(), p1.path.b(), p2.path.a(), p2.path.b()};
          if (ends.size() != 3) continue;
          Vertex x = p1.path.has_end(p2.path.a()) ? p2.path.a() : p2.path.b();
          const Edge e1 = p1.support_at(x), e2 = p2.support_at(x);
          const int shared = e1.contains(e2.u) + e1.contains(e2.v);
          if (shared != 1) continue;
          seen = true;
          CHECK(classify_configuration(q, p1, p2) == 2);
        }
      }
    }
  }
  CHECK(seen);
}

TEST_CASE("every stage passes the checker") {
  for (const auto& [name, g] : corpus::bridgeless()) {
    CAPTURE(name);
    const auto rep = generate_hexagon_trace(g);
    REQUIRE(rep.stages.size() == rep.decomposition.ears.size());
    for (std::size_t i = 0; i < rep.stages.size(); ++i) {
      const auto diag =
          check_ear_square_graph(rep.stages[i], stage_graph(rep.decomposition, i + 1), rep.matching);
      CHECK_MESSAGE(diag.ok(), diag.summary());
    }
    const auto sq = check_square_graph(rep.stages.back(), g, rep.matching);
    CHECK_MESSAGE(sq.ok(), sq.summary());
  }
}

TEST_CASE("each later ear adds eight vertices") {
  for (const auto& [name, g] : corpus::bridgeless()) {
    CAPTURE(name);
    const auto rep = generate_hexagon_trace(g);
    for (std::size_t i = 1; i < rep.stages.size(); ++i) {
      CHECK(rep.stages[i].graph.num_vertices() == rep.stages[i - 1].graph.num_vertices() + 8);
      std::size_t type2 = 0;
      for (std::size_t k = rep.stage_end[i - 1]; k < rep.stage_end[i]; ++k) {
        type2 += rep.trace.steps[k].kind == StepKind::kType2;
      }
      CHECK(type2 == 4);
    }
  }
}

TEST_CASE("basic square construction on two projections of the first stage") {
  const auto s = stage1(corpus::k4());
  const auto& pr = s.r.q.projections;
  const Edge ea = pr[0].support_a, eb = pr[0].support_b, ec = pr[1].support_a, ed = pr[1].support_b;
  Vertex next = 100;
  const auto out = basic_square_construction(s.r.q.graph, ea, eb, ec, ed, next);
  CHECK(out.graph.num_vertices() == s.r.q.graph.num_vertices() + 8);
  CHECK(is_four_cycle(out.graph, out.square1));
  CHECK(is_four_cycle(out.graph, out.square2));
  const auto& e = out.distinguished;
  CHECK(joined(out.graph, Edge(out.square1[0], out.square1[1]), e[0]));
  CHECK(joined(out.graph, Edge(out.square1[2], out.square1[3]), e[1]));
  CHECK(joined(out.graph, Edge(out.square2[0], out.square2[1]), e[2]));
  CHECK(joined(out.graph, Edge(out.square2[2], out.square2[3]), e[3]));
  CHECK(joined(out.graph, Edge(out.square1[1], out.square1[2]), Edge(out.square2[1], out.square2[2])));
  // Old projections between the distinguished edges are gone.
  CHECK(!joined(out.graph, e[0], e[1]));
  CHECK(!joined(out.graph, e[2], e[3]));

  LabeledGraph h = s.r.q.graph;
  for (const auto& st : out.steps) {
    CHECK((st.kind == StepKind::kType1 || st.kind == StepKind::kType2));
    apply_step(h, st);
    CHECK(is_bipartite(h));
  }
  CHECK(h.same_as(out.graph));
}

TEST_CASE("basic square construction rejects a wrong pattern") {
  const auto s = stage1(corpus::k4());
  const auto& pr = s.r.q.projections;
  Vertex next = 100;
  CHECK(error_kind([&] {
          basic_square_construction(s.r.q.graph, pr[0].support_a, pr[1].support_a, pr[0].support_b,
                                    pr[1].support_b, next);
        }) == "pattern");
}

TEST_CASE("double augmentation step kinds and degrees") {
  for (const auto& [name, g] : corpus::bridgeless()) {
    CAPTURE(name);
    const auto rep = generate_hexagon_trace(g);
    const auto& q = rep.stages.back();
    LabeledGraph current = q.graph;
    Vertex next = 1u << 20;
    for (const Edge& e : rep.matching) {
      const auto da = double_augmentation(q, current, e.u, e.v, next);
      REQUIRE(da.steps.size() == 6);
      CHECK(da.steps[0].kind == StepKind::kType1);
      CHECK(da.steps[1].kind == StepKind::kType1);
      CHECK(da.steps[2].kind == StepKind::kType2);
      CHECK(da.steps[3].kind == StepKind::kType1);
      CHECK(da.steps[4].kind == StepKind::kType2);
      CHECK(da.steps[5].kind == StepKind::kType1);
      for (std::size_t k = 0; k < da.steps.size(); ++k) {
        if (k == 4) CHECK(current.degree(da.steps[4].first.x) == 6);
        if (k == 2) CHECK(current.degree(da.steps[2].first.x) == 5);
        apply_step(current, da.steps[k]);
      }
      CHECK((da.configuration == 'a' || da.configuration == 'b' || da.configuration == 'c'));
      for (const auto* h : {&da.hu, &da.hv}) {
        CHECK(h->labels.size() == 6);
        CHECK(h->red_by_neighbor.size() == 3);
        for (const auto& [nb, red] : h->red_by_neighbor) CHECK(current.has_edge(red));
      }
    }
  }
}

TEST_CASE("end to end on the bridgeless corpus") {
  for (const auto& [name, g] : corpus::bridgeless()) {
    CAPTURE(name);
    const auto rep = generate_hexagon_trace(g);
    const auto diag = verify_pipeline(g, rep);
    CHECK_MESSAGE(diag.ok(), diag.summary());
    const auto final_graph = replay_trace(rep.trace).graph;
    CHECK(final_graph.same_as(build_hexagon_graph(g).graph));
    CHECK(final_graph.num_vertices() == 6 * g.num_vertices());
    CHECK(rep.double_augmentations == g.num_vertices() / 2);
    for (const auto& st : rep.trace.steps) CHECK((st.kind == StepKind::kType1 || st.kind == StepKind::kType2));
    CHECK(rep.trace.base.name == "L8");
  }
}

TEST_CASE("K4 trace ends at 24 vertices and 48 edges") {
  const auto rep = generate_hexagon_trace(corpus::k4());
  const auto final_graph = replay_trace(rep.trace).graph;
  CHECK(final_graph.num_vertices() == 24);
  CHECK(final_graph.num_edges() == 48);
  CHECK(rep.trace.steps.size() == 20);
}

TEST_CASE("Petersen tail has five double augmentations") {
  const auto rep = generate_hexagon_trace(corpus::petersen());
  CHECK(rep.double_augmentations == 5);
  CHECK(rep.trace.steps.size() - rep.stage_end.back() == 30);
}

TEST_CASE("pipeline output is deterministic") {
  const auto a = generate_hexagon_trace(corpus::cube());
  const auto b = generate_hexagon_trace(corpus::cube());
  CHECK(a.trace.steps == b.trace.steps);
  CHECK(a.trace.base.labels == b.trace.base.labels);
}

TEST_CASE("intermediate graphs stay braces") {
  for (const auto& [name, g] : corpus::bridgeless()) {
    if (g.num_vertices() > 10) continue;
    CAPTURE(name);
    const auto rep = generate_hexagon_trace(g);
    std::size_t checked = 0;
    replay_trace(rep.trace, [&](std::size_t i, const LabeledGraph& h) {
      if (i % 5 != 0 && i != rep.trace.steps.size()) return;
      ++checked;
      const auto br = is_brace(h);
      CHECK_MESSAGE(br.brace, "step " << i << ": " << br.describe());
    });
    CHECK(checked > 0);
  }
}

TEST_CASE("invalid inputs") {
  CHECK(error_kind([] { generate_hexagon_trace(corpus::bridged10()); }) == "bridged");
  CHECK(error_kind([] { generate_hexagon_trace(corpus::cycle(6)); }) == "not_cubic");
  LabeledGraph two_k4(8);
  for (Vertex off : {0u, 4u}) {
    for (Vertex a = 0; a < 4; ++a) {
      for (Vertex b = a + 1; b < 4; ++b) two_k4.add_edge(off + a, off + b);
    }
  }
  CHECK(error_kind([&] { generate_hexagon_trace(two_k4); }) == "disconnected");
}
