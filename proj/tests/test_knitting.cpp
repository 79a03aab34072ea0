#include "knitwall/errors.hpp"
#include "knitwall/knitting.hpp"

#include <doctest.h>

using namespace knitwall;

namespace {
const DynkinType D4{Family::D, 4}, D5{Family::D, 5}, E7{Family::E, 7}, A1{Family::A, 1}, A3{Family::A, 3};
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(Configuration(D4, {}), ArgumentError);
  CHECK_THROWS_AS(Configuration(D4, {1, 1}), ArgumentError);
  CHECK_THROWS_AS(Configuration(D4, {0, 1}), ArgumentError);
  CHECK_THROWS_AS(Configuration(D4, {5}), ArgumentError);
  const Configuration c(E7, {5, 3});
  CHECK(c.slot_of(3) == 1);
  CHECK(c.slot_of(4) == -1);
  CHECK(c.with_slot(0, 6).slots() == std::vector<Vertex>{6, 3});
}

TEST_CASE("D5: pivot h3 exchanges through two copies each of 0 and f1") {
  const Configuration c(D5, {1, 3});
  const auto trace = knit_trace(c, 1);
  CHECK(trace.result.b == std::map<Vertex, int>{{0, 2}, {1, 2}});
  CHECK(trace.result.new_vertex == 3);
  // Columns over vertices 0..5 (0, f1, h2, h3, f2, f3).
  REQUIRE(trace.steps.size() == 7);
  CHECK(trace.steps[0].column == std::vector<int>{0, 0, 0, 1, 0, 0});
  CHECK(trace.steps[1].column == std::vector<int>{0, 0, 1, 0, 1, 1});
  CHECK(trace.steps[2].column == std::vector<int>{1, 1, 0, 2, 0, 0});
  CHECK(trace.steps[2].harvested == std::map<Vertex, int>{{0, 1}, {1, 1}});
  CHECK(trace.steps[4].column == std::vector<int>{1, 1, 0, 1, 0, 0});
  CHECK(trace.steps[5].column == std::vector<int>{0, 0, 0, 0, 0, 0});
  CHECK(trace.steps[6].column == std::vector<int>{0, 0, 0, -1, 0, 0});
}

TEST_CASE("E7 exchanges for the two-slot configuration") {
  const Configuration c(E7, {5, 3});
  const auto first = knit(c, 0);
  CHECK(first.b == std::map<Vertex, int>{{3, 1}});
  CHECK(first.new_vertex == 5);
  const auto second = knit(c, 1);
  CHECK(second.b == std::map<Vertex, int>{{0, 2}, {5, 3}});
  CHECK(second.new_vertex == 3);
}

TEST_CASE("D4 outer leaves knit to the hub") {
  const Configuration c(D4, {1, 3, 4});
  for (std::size_t s = 0; s < 3; ++s) {
    const auto ex = knit(c, s);
    CHECK(ex.new_vertex == 2);
    int total = 0;
    for (auto [v, k] : ex.b) {
      CHECK(k == 1);
      CHECK(v != c.vertex_at(s));
      total += k;
    }
    CHECK(total == 3);
  }
}

TEST_CASE("small cases") {
  const auto a1 = knit(Configuration(A1, {1}), 0);
  CHECK(a1.b == std::map<Vertex, int>{{0, 2}});
  CHECK(a1.new_vertex == 1);
  const auto a3 = knit(Configuration(A3, {1, 2, 3}), 1);
  CHECK(a3.b == std::map<Vertex, int>{{1, 1}, {3, 1}});
  CHECK(a3.new_vertex == 2);
}

TEST_CASE("step cap") {
  const DynkinDiagram e8(DynkinType(Family::E, 8));
  CHECK(knit_step_cap(e8) == 64 * 9 * 6);
  CHECK_THROWS_AS(knit(Configuration(D4, {1}), 3), ArgumentError);
  // D5 h3 needs six steps; a cap of three must fail loudly with the trace.
  CHECK_THROWS_AS(knit_trace(Configuration(D5, {1, 3}), 1, 3), NonTerminationError);
  try {
    knit_trace(Configuration(D5, {1, 3}), 1, 3);
  } catch (const NonTerminationError& e) {
    CHECK(std::string(e.what()).find("exceeded 3 steps") != std::string::npos);
  }
}
