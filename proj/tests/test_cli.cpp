#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>
#include "doctest.h"
#include "cli.hpp"
#include "hexbrace/json_io.hpp"

using namespace hexbrace;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hexbrace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HEXBRACE_DATA_DIR) + "/" + name + ".edges"; }

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hexbrace_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
}

}  // namespace

TEST_CASE("hexagon build emits 6n vertices") {
  const auto r = run({"hexagon", "build", data("k4"), "--verify"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["vertices"].size() == 24);
  CHECK(j["edges"].size() == 48);
  std::size_t red = 0;
  for (const auto& e : j["edges"]) red += e["color"] == "red";
  CHECK(red == 12);
}

TEST_CASE("hexagon build --dot colours edges") {
  const auto r = run({"hexagon", "build", data("k4"), "--dot"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("graph hexagon {", 0) == 0);
  CHECK(r.out.find("color=red") != std::string::npos);
  CHECK(r.out.find("color=blue") != std::string::npos);
  CHECK(r.out.find("color=black") != std::string::npos);
}

TEST_CASE("dcdc find then verify") {
  const auto found = run({"dcdc", "find", data("petersen"), "--jobs", "2", "--verify"});
  REQUIRE(found.code == 0);
  const std::string path = temp_file("petersen_cert.json");
  write_file(path, found.out);
  CHECK(run({"dcdc", "verify", data("petersen"), path}).code == 0);

  auto j = Json::parse(found.out);
  j["certificate"]["cycles"][0].erase(0);
  write_file(path, j.dump());
  const auto bad = run({"dcdc", "verify", data("petersen"), path});
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.out)["valid"] == false);
  std::remove(path.c_str());
}

TEST_CASE("dcdc find is independent of the worker count") {
  CHECK(run({"dcdc", "find", data("cube")}).out == run({"dcdc", "find", data("cube"), "--jobs", "3"}).out);
}

TEST_CASE("brace check on C6 and K3,3") {
  const auto c6 = run({"brace", "check", data("c6"), "--verify"});
  CHECK(c6.code == 1);
  CHECK(c6.err.find("not a brace: pair (0-1, 3-4)") != std::string::npos);
  CHECK(run({"brace", "check", data("k33")}).code == 0);
}

TEST_CASE("base graphs") {
  const auto r = run({"base", "ladder", "8", "--verify"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["edges"].size() == 12);
  CHECK(run({"base", "ladder", "7"}).code == 2);
  CHECK(run({"base", "nonsense", "8"}).code == 2);
}

TEST_CASE("trace generate and replay round trip") {
  const std::string path = temp_file("k33_trace.json");
  const auto gen = run({"trace", "generate", data("k33"), "-o", path, "--verify"});
  REQUIRE(gen.code == 0);
  const auto report = Json::parse(gen.out);
  CHECK(report["ears"].size() == 3);
  CHECK(report["double_augmentations"] == 3);
  const auto rep = run({"trace", "replay", path, "--spot-check-brace", "5", "--against", data("k33"), "--verify"});
  REQUIRE(rep.code == 0);
  const auto j = Json::parse(rep.out);
  CHECK(j["vertices"] == 36);
  CHECK(j["matches_hexagon_graph"] == true);
  CHECK(!j["spot_checks"].empty());
  CHECK(run({"trace", "replay", path, "--against", data("k4")}).code == 1);

  auto t = Json::parse(std::ifstream(path));
  t["steps"][0]["edge"] = Json::array({0, 2});
  write_file(path, t.dump());
  CHECK(run({"trace", "replay", path}).code == 1);
  write_file(path, "{ not json");
  CHECK(run({"trace", "replay", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("trace generate rejects a bridged graph") {
  const auto r = run({"trace", "generate", data("bridged10")});
  CHECK(r.code == 1);
  CHECK(r.err.find("bridge") != std::string::npos);
}

TEST_CASE("embed faces and census") {
  const std::string path = temp_file("k4_rotation.json");
  // Planar rotation of K4.
  write_file(path, R"({"rotation": {"0": [1, 2, 3], "1": [0, 3, 2], "2": [0, 1, 3], "3": [0, 2, 1]}})");
  const auto f = run({"embed", "faces", data("k4"), path, "--verify"});
  REQUIRE(f.code == 0);
  const auto j = Json::parse(f.out);
  CHECK(j["faces"].size() == 4);
  CHECK(j["genus"] == 0);
  std::remove(path.c_str());

  const auto c = run({"embed", "census", data("k4"), "--verify"});
  REQUIRE(c.code == 0);
  const auto cj = Json::parse(c.out);
  CHECK(cj["rotation_systems"] == 16);
  CHECK(cj["by_faces"]["4"] == 2);
  CHECK(cj["by_faces"]["2"] == 14);
  CHECK(cj["no_dual_loop"] == cj["safe_blue_matchings"]);
  CHECK(run({"embed", "census", data("petersen")}).code == 2);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"hexagon", "build", "/nonexistent/graph.edges"}).code == 2);
  CHECK(run({"hexagon", "build", data("c6")}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("output is byte identical across runs") {
  CHECK(run({"trace", "generate", data("cube")}).out == run({"trace", "generate", data("cube")}).out);
  CHECK(run({"hexagon", "build", data("prism")}).out == run({"hexagon", "build", data("prism")}).out);
}
