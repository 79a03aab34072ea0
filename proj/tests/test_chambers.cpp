#include "knitwall/chambers.hpp"
#include "knitwall/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace knitwall;

namespace {

ChamberStructure run(Family f, int n, std::vector<Vertex> slots) {
  return enumerate_chambers(Configuration(DynkinType(f, n), std::move(slots)));
}

std::set<IntVector> wall_set(const ChamberStructure& cs) {
  std::set<IntVector> out;
  for (const auto& w : cs.walls) out.insert(w.coeffs());
  return out;
}

std::size_t degree(const ChamberStructure& cs, std::size_t id) { return skeleton(cs).at(id).size(); }

}  // namespace

TEST_CASE("E7 two-slot chamber structure") {
  const auto cs = run(Family::E, 7, {5, 3});
  CHECK(cs.chambers.size() == 12);
  CHECK(wall_set(cs) == std::set<IntVector>{{1, 0}, {0, 1}, {1, 1}, {2, 3}, {1, 2}, {1, 3}});
  CHECK(cs.skeleton.size() == 12);  // a 12-cycle
  for (std::size_t i = 0; i < 12; ++i) CHECK(degree(cs, i) == 2);
  CHECK(bounds(cs) == Bounds{1, 12});
  REQUIRE(cs.oracle);
  CHECK(cs.oracle->walls_match);
  CHECK(cs.oracle->whitney_count == 12u);
  CHECK(cs.chambers.front().word.empty());
  CHECK(cs.chambers.front().interior_point == std::vector<Rational>{1, 1});
}

TEST_CASE("D4 three outer leaves") {
  const auto cs = run(Family::D, 4, {1, 3, 4});
  CHECK(cs.chambers.size() == 32);
  CHECK(cs.walls.size() == 7);
  CHECK(degree(cs, 0) == 3);
  CHECK(bounds(cs).lower >= 4);
  CHECK(bounds(cs).upper == 32);
  // Every wall of C_+ changes the configuration: the hub replaces a leaf.
  for (const auto& e : cs.skeleton) {
    if (e.a != 0) continue;
    CHECK(e.configuration_changing);
    const auto& other = cs.chambers[e.b];
    CHECK(std::count(other.config.begin(), other.config.end(), 2) == 1);
    CHECK(other.dual_graph.edges.size() == 2);  // the hub joins the two remaining leaves
  }
}

TEST_CASE("D4 (1,2,1) wall list") {
  const auto cs = run(Family::D, 4, {1, 3, 2});
  CHECK(cs.chambers.size() == 32);
  CHECK(wall_set(cs) == std::set<IntVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1},
                                            {1, 1, 2}});
}

TEST_CASE("E6 configurations") {
  const auto big = run(Family::E, 6, {1, 5, 3});
  CHECK(big.chambers.size() == 60);
  CHECK(big.walls.size() == 10);
  CHECK(bounds(big) == Bounds{5, 60});
  const auto enriched = run(Family::E, 6, {1, 3});
  CHECK(enriched.chambers.size() == 10);
  CHECK(enriched.config_classes.size() == 5);
  CHECK(bounds(enriched) == Bounds{5, 10});
  std::size_t total = 0;
  for (const auto& c : enriched.config_classes) total += c.multiplicity;
  CHECK(total == 10);
}

TEST_CASE("two-curve series") {
  struct Case {
    Family f;
    int n;
    std::vector<Vertex> slots;
    int k;
  };
  for (const auto& c : {Case{Family::A, 2, {1, 2}, 1}, Case{Family::D, 4, {1, 2}, 2}, Case{Family::E, 6, {1, 3}, 3},
                        Case{Family::E, 7, {6, 3}, 4}}) {
    const auto cs = run(c.f, c.n, c.slots);
    std::set<IntVector> expect{{1, 0}, {0, 1}};
    for (int k = 1; k <= c.k; ++k) expect.insert({1, k});
    CHECK(wall_set(cs) == expect);
    CHECK(cs.chambers.size() == static_cast<std::size_t>(2 * (c.k + 2)));
  }
}

TEST_CASE("full retention gives Weyl group orders") {
  CHECK(run(Family::A, 2, {1, 2}).chambers.size() == 6);
  CHECK(run(Family::A, 3, {1, 2, 3}).chambers.size() == 24);
  CHECK(run(Family::D, 4, {1, 2, 3, 4}).chambers.size() == 192);
}

TEST_CASE("A1: two chambers across one wall") {
  const auto cs = run(Family::A, 1, {1});
  CHECK(cs.chambers.size() == 2);
  CHECK(cs.skeleton.size() == 1);
  CHECK_FALSE(cs.skeleton.front().configuration_changing);
}

TEST_CASE("point location") {
  const auto cs = run(Family::E, 7, {5, 3});
  CHECK(chambers_containing(cs, IntVector{1, 1}) == std::vector<std::size_t>{0});
  CHECK(chambers_containing(cs, IntVector{5, -1}).size() == 1);
  CHECK(chambers_containing(cs, IntVector{1, 0}).empty());
}

TEST_CASE("state cap is a loud failure") {
  EnumerateOptions opts;
  opts.oracle = false;
  opts.state_cap = 5;
  CHECK_THROWS_AS(enumerate_chambers(Configuration(DynkinType(Family::E, 7), {5, 3}), opts), ResourceError);
}

TEST_CASE("without the oracle the same structure is found") {
  EnumerateOptions opts;
  opts.oracle = false;
  const auto plain = enumerate_chambers(Configuration(DynkinType(Family::E, 6), {1, 5, 3}), opts);
  const auto checked = run(Family::E, 6, {1, 5, 3});
  CHECK_FALSE(plain.oracle);
  CHECK(plain.walls == checked.walls);
  REQUIRE(plain.chambers.size() == checked.chambers.size());
  for (std::size_t i = 0; i < plain.chambers.size(); ++i) CHECK(plain.chambers[i].word == checked.chambers[i].word);
}
