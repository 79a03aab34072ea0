#include "knitwall/cone.hpp"
#include "knitwall/errors.hpp"
#include "knitwall/linalg.hpp"

#include <doctest.h>

#include <limits>
#include <random>

using namespace knitwall;

TEST_CASE("rational text round trip") {
  for (const auto& q : {Rational(0), Rational(5), Rational(-3, 7), Rational(22, 4)}) CHECK(parse_rational(to_string(q)) == q);
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), ArgumentError);
  CHECK_THROWS_AS(parse_rational("x"), ArgumentError);
}

TEST_CASE("checked arithmetic reports overflow") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked_add(big, 1), ResourceError);
  CHECK_THROWS_AS(checked_mul(big, 2), ResourceError);
  CHECK(checked_mul(-4, 5) == -20);
}

TEST_CASE("covector normal form") {
  CHECK(Covector({-2, -4, 0}).coeffs() == IntVector{1, 2, 0});
  CHECK(Covector({0, -3, 6}).coeffs() == IntVector{0, 1, -2});
  CHECK(Covector::orientation_of({0, -3, 6}) == -1);
  CHECK(Covector({2, 3}).pretty() == "2ϑ1+3ϑ2");
  CHECK(Covector({1, -1}).pretty() == "ϑ1-ϑ2");
  CHECK_THROWS_AS(Covector({0, 0}), ArgumentError);
}

TEST_CASE("determinant and rank agree with cofactor expansion") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = d(rng);
    const std::int64_t cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    CHECK(determinant(m) == cof);
    std::vector<IntVector> rows{m.row(0), m.row(1), m.row(2)};
    CHECK((rank_of(rows) == 3) == (cof != 0));
    EchelonBasis basis(3);
    std::size_t grew = 0;
    for (const auto& r : rows) grew += basis.insert(r);
    CHECK(grew == rank_of(rows));
  }
}

TEST_CASE("matrix product and application") {
  IntMatrix a(2, 2), b(2, 2);
  a(0, 0) = 1, a(0, 1) = 2, a(1, 0) = 3, a(1, 1) = 4;
  b(0, 0) = 0, b(0, 1) = 1, b(1, 0) = 1, b(1, 1) = 0;
  const auto c = a * b;
  CHECK(c.row(0) == IntVector{2, 1});
  CHECK(c.apply(IntVector{1, 1}) == IntVector{3, 7});
  CHECK(IntMatrix::identity(2) * a == a);
}

TEST_CASE("strict cone feasibility") {
  // x > 0, y > 0, x + y < 1 is empty only for the homogeneous version.
  const std::vector<IntVector> quadrant{{1, 0}, {0, 1}};
  auto p = strict_cone_point(quadrant, 2);
  REQUIRE(p);
  CHECK((*p)[0] > 0);
  CHECK((*p)[1] > 0);
  const std::vector<IntVector> empty{{1, 0}, {0, 1}, {-1, -1}};
  CHECK_FALSE(strict_cone_point(empty, 2));
  CHECK_FALSE(strict_cone_feasible(empty, 2));
  const std::vector<IntVector> thin{{2, -1}, {-3, 2}};  // 3/2 x < y < 2x
  p = strict_cone_point(thin, 2);
  REQUIRE(p);
  CHECK(2 * (*p)[0] - (*p)[1] > 0);
  CHECK(-3 * (*p)[0] + 2 * (*p)[1] > 0);
}

TEST_CASE("redundant rows are pruned and faces found") {
  const std::vector<IntVector> rows{{1, 0}, {0, 1}, {1, 1}, {1, 0}};
  CHECK(irredundant_rows(rows, 2) == std::vector<std::size_t>{0, 1});
  const auto f = face_point(std::vector<IntVector>{{0, 1}, {1, 1}}, IntVector{1, 0});
  REQUIRE(f);
  CHECK((*f)[0] == 0);
  CHECK((*f)[1] > 0);
}

TEST_CASE("random cones: returned points satisfy every inequality") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<IntVector> rows(4, IntVector(3));
    bool zero = false;
    for (auto& r : rows) {
      for (auto& x : r) x = d(rng);
      zero = zero || gcd_of(r) == 0;
    }
    if (zero) continue;
    const auto p = strict_cone_point(rows, 3);
    CHECK(p.has_value() == strict_cone_feasible(rows, 3));
    if (!p) continue;
    ++feasible;
    for (const auto& r : rows) CHECK(dot(r, *p) > 0);
  }
  CHECK(feasible > 20);
}
