#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "antimagic/gen.hpp"
#include "antimagic/io.hpp"
#include "antimagic/pipeline.hpp"

using namespace antimagic;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "antimagic_io_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

io::ResultFile sample_result() {
  ComponentSpec spec{2, {5, 6}};
  auto [g, report] = assemble(spec);
  const auto run = run_pipeline(g, {});
  return io::build_result(g, run, 64);
}

}  // namespace

TEST_CASE("instance file round trip") {
  io::Instance inst;
  inst.vertex_count = 4;
  inst.edges = {{0, 1}, {1, 2}, {2, 3}};
  std::stringstream ss;
  io::write_instance(ss, inst);
  const auto back = io::read_instance(ss);
  CHECK(back.vertex_count == 4);
  CHECK(back.edges == inst.edges);
}

TEST_CASE("instance reader tolerates comments and blanks") {
  std::stringstream ss("# a comment\n\n5\n0 1\n\n# another\n1 2\n");
  const auto inst = io::read_instance(ss);
  CHECK(inst.vertex_count == 5);
  CHECK(inst.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("instance reader rejects junk") {
  {
    std::stringstream ss("");
    CHECK_THROWS_AS(io::read_instance(ss), Error);
  }
  {
    std::stringstream ss("abc\n");
    CHECK_THROWS_AS(io::read_instance(ss), Error);
  }
  {
    std::stringstream ss("3\n0\n");
    CHECK_THROWS_AS(io::read_instance(ss), Error);
  }
}

TEST_CASE("result file text round trip") {
  const io::ResultFile rf = sample_result();
  REQUIRE(rf.antimagic);
  std::stringstream ss;
  io::write_result(ss, rf);
  const auto back = io::read_result_text(ss);
  CHECK(back.vertices == rf.vertices);
  CHECK(back.edges == rf.edges);
  CHECK(back.d == rf.d);
  CHECK(back.q == rf.q);
  CHECK(back.k == rf.k);
  CHECK(back.x0 == rf.x0);
  CHECK(back.seed == rf.seed);
  CHECK(back.retry_budget == rf.retry_budget);
  CHECK(back.antimagic == rf.antimagic);
  CHECK(back.gapspecs == rf.gapspecs);
  REQUIRE(back.arcs.size() == rf.arcs.size());
  for (std::size_t i = 0; i < rf.arcs.size(); ++i) {
    CHECK(back.arcs[i].from == rf.arcs[i].from);
    CHECK(back.arcs[i].to == rf.arcs[i].to);
    CHECK(back.arcs[i].label == rf.arcs[i].label);
  }
  CHECK(back.sums == rf.sums);
}

TEST_CASE("result round trip keeps the verdict") {
  const io::ResultFile rf = sample_result();
  std::stringstream ss;
  io::write_result(ss, rf);
  const auto back = io::read_result_text(ss);
  // recompute the verdict from the parsed arcs alone
  std::vector<long long> sums(back.vertices, 0);
  for (const auto& a : back.arcs) {
    sums[a.to] += a.label;
    sums[a.from] -= a.label;
  }
  std::sort(sums.begin(), sums.end());
  const bool distinct = std::adjacent_find(sums.begin(), sums.end()) == sums.end();
  CHECK(distinct == back.antimagic);
}

TEST_CASE("result json round trip") {
  const io::ResultFile rf = sample_result();
  const auto j = io::result_to_json(rf);
  const auto back = io::result_from_json(j);
  CHECK(back.vertices == rf.vertices);
  CHECK(back.x0 == rf.x0);
  CHECK(back.antimagic == rf.antimagic);
  CHECK(back.gapspecs == rf.gapspecs);
  CHECK(back.sums == rf.sums);
  REQUIRE(back.arcs.size() == rf.arcs.size());
  CHECK(back.arcs.front().label == rf.arcs.front().label);
}

TEST_CASE("read_result sniffs text vs json") {
  const io::ResultFile rf = sample_result();
  const auto text_path = temp_file("sniff.result");
  io::write_atomic(text_path, [&rf](std::ostream& out) { io::write_result(out, rf); });
  const auto json_path = temp_file("sniff.json");
  io::write_atomic(json_path,
                   [&rf](std::ostream& out) { out << io::result_to_json(rf).dump(2) << '\n'; });
  CHECK(io::read_result(text_path).edges == rf.edges);
  CHECK(io::read_result(json_path).edges == rf.edges);
  CHECK_FALSE(std::filesystem::exists(text_path.string() + ".tmp"));
}

TEST_CASE("malformed result files are rejected") {
  {
    std::stringstream ss("not a result\n");
    CHECK_THROWS_AS(io::read_result_text(ss), Error);
  }
  {
    std::stringstream ss("antimagic-result v1\nvertices 2\narcs 1\n0 1\nsums 0\nend\n");
    CHECK_THROWS_AS(io::read_result_text(ss), Error);  // truncated arc line
  }
  {
    std::stringstream ss("antimagic-result v1\narcs 0\n");
    CHECK_THROWS_AS(io::read_result_text(ss), Error);  // missing sums
  }
}

TEST_CASE("dot export carries labels and sums") {
  const io::ResultFile rf = sample_result();
  std::stringstream ss;
  io::write_dot(ss, rf);
  const std::string dot = ss.str();
  CHECK(dot.find("digraph antimagic {") == 0);
  CHECK(dot.find("->") != std::string::npos);
  CHECK(dot.find("\\ns=") != std::string::npos);
  CHECK(dot.find("[label=\"") != std::string::npos);
  CHECK(dot.rfind("}\n") == dot.size() - 2);
}
