#include <functional>
#include "doctest.h"
#include "hexbrace/corpus.hpp"
#include "hexbrace/json_io.hpp"

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

}  // namespace

TEST_CASE("graph round trip") {
  const auto g = corpus::petersen();
  CHECK(graph_from_json(to_json(g)).same_as(g));
}

TEST_CASE("every step kind round trips") {
  Expansion a{0, {1, 2}, {3, 4}, 10, 11, 12};
  Expansion b{5, {6, 7}, {8, 9}, 13, 14, 15};
  AugmentationStep t3;
  t3.kind = StepKind::kType3;
  t3.first = a;
  t3.second = b;
  AugmentationStep t4 = t3;
  t4.kind = StepKind::kType4;
  for (const auto& s : {AugmentationStep::type1(3, 8), AugmentationStep::type2(a, 7), AugmentationStep::expand(a), t3, t4}) {
    CHECK(step_from_json(to_json(s)) == s);
  }
  const auto j = to_json(AugmentationStep::type2(a, 7));
  for (const char* key : {"kind", "x", "n1", "n2", "x1", "v", "x2", "w"}) CHECK(j.contains(key));
  CHECK(to_json(AugmentationStep::type1(3, 8))["edge"] == Json::array({3, 8}));
}

TEST_CASE("trace round trip with named and inline bases") {
  AugmentationTrace t;
  t.base.name = "L8";
  t.base.labels = {7, 6, 5, 4, 3, 2, 1, 0};
  t.steps = {AugmentationStep::type1(4, 2)};
  const auto back = trace_from_json(to_json(t));
  CHECK(back.base.name == "L8");
  CHECK(back.base.labels == t.base.labels);
  CHECK(back.steps == t.steps);

  AugmentationTrace u;
  u.base.inline_graph = corpus::k33();
  const auto ub = trace_from_json(to_json(u));
  CHECK(ub.base.name.empty());
  CHECK(ub.base.inline_graph.same_as(corpus::k33()));
}

TEST_CASE("certificate and rotation round trip") {
  DcdcCertificate c{{{{0, 1}, {1, 2}, {2, 0}}, {{0, 2}}}};
  CHECK(certificate_from_json(to_json(c)).cycles == c.cycles);
  RotationSystem r;
  r.order = {{0, {1, 2, 3}}, {1, {0, 3, 2}}};
  CHECK(rotation_from_json(to_json(r)).order == r.order);
}

TEST_CASE("malformed documents") {
  CHECK(error_kind([] { parse_json_text("{"); }) == "json_format");
  CHECK(error_kind([] { trace_from_json(Json::parse(R"({"steps": []})")); }) == "json_format");
  CHECK(error_kind([] { step_from_json(Json::parse(R"({"kind": "type1", "edge": [1]})")); }) == "json_format");
  CHECK(error_kind([] { step_from_json(Json::parse(R"({"kind": "type9"})")); }) == "trace_format");
  CHECK(error_kind([] { step_from_json(Json::parse(R"({"kind": "type1", "edge": [-1, 2]})")); }) == "json_format");
  CHECK(error_kind([] { rotation_from_json(Json::parse(R"({"rotation": {"a": [1]}})")); }) == "json_format");
}
