#include "knitwall/dynkin.hpp"
#include "knitwall/errors.hpp"

#include <doctest.h>

#include <algorithm>

using namespace knitwall;

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// Affine edge lists written out by hand from the documented labeling.
EdgeList expected_edges(const DynkinType& t) {
  EdgeList e;
  const int n = t.rank();
  switch (t.family()) {
    case Family::A:
      if (n == 1) return {{0, 1}, {0, 1}};
      for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(0, 1);
      e.emplace_back(0, n);
      return e;
    case Family::D:
      for (int i = 2; i < n - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(0, 2);
      e.emplace_back(1, 2);
      e.emplace_back(n - 2, n - 1);
      e.emplace_back(n - 2, n);
      return e;
    case Family::E:
      if (n == 6) return {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {0, 6}};
      if (n == 7) return {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}, {0, 1}};
      return {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}, {0, 1}};
  }
  return e;
}

std::vector<std::vector<int>> cartan_from(const EdgeList& edges, int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (auto [u, v] : edges)
    if (u != 0 && v != 0) --c[u - 1][v - 1], --c[v - 1][u - 1];
  return c;
}

// Brute force: positive roots of a simply-laced finite system are the
// nonzero vectors below the highest root (= δ on vertices 1..n) of norm 2.
std::vector<RootVector> brute_force_roots(const DynkinType& t) {
  const DynkinDiagram d(t);
  const int n = t.rank();
  const auto c = cartan_from(expected_edges(t), n);
  std::vector<RootVector> out;
  std::vector<int> x(n, 0);
  while (true) {
    int q = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) q += x[i] * c[i][j] * x[j];
    if (q == 2 && std::any_of(x.begin(), x.end(), [](int v) { return v != 0; })) out.push_back({x});
    int k = 0;
    while (k < n && x[k] == d.delta(k + 1)) x[k++] = 0;
    if (k == n) break;
    ++x[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DynkinType> all_types() {
  std::vector<DynkinType> out;
  for (int n = 1; n <= 8; ++n) out.emplace_back(Family::A, n);
  for (int n = 4; n <= 8; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) out.emplace_back(Family::E, n);
  return out;
}

}  // namespace

TEST_CASE("type names parse and reject out-of-range pairs") {
  CHECK(DynkinType::parse("E7") == DynkinType(Family::E, 7));
  CHECK(DynkinType::parse("A1").name() == "A1");
  CHECK_THROWS_AS(DynkinType::parse("D3"), ArgumentError);
  CHECK_THROWS_AS(DynkinType::parse("E9"), ArgumentError);
  CHECK_THROWS_AS(DynkinType::parse("F4"), ArgumentError);
  CHECK_THROWS_AS(DynkinType::parse("A0"), ArgumentError);
  CHECK_THROWS_AS(DynkinType::parse(""), ArgumentError);
}

TEST_CASE("documented labeling is the built one") {
  for (const auto& t : all_types()) {
    CAPTURE(t.name());
    const DynkinDiagram d(t);
    CHECK(d.vertex_count() == t.rank() + 1);
    EdgeList expect = expected_edges(t);
    std::vector<std::tuple<Vertex, Vertex, int>> want;
    std::map<std::pair<Vertex, Vertex>, int> count;
    for (auto [u, v] : expect) ++count[{std::min(u, v), std::max(u, v)}];
    for (auto [uv, m] : count) want.emplace_back(uv.first, uv.second, m);
    CHECK(d.edges() == want);
    CHECK(d.finite_cartan() == cartan_from(expect, t.rank()));
  }
}

TEST_CASE("delta tables") {
  CHECK(DynkinDiagram(DynkinType(Family::E, 6)).deltas() == std::vector<int>{1, 1, 2, 3, 2, 1, 2});
  CHECK(DynkinDiagram(DynkinType(Family::E, 7)).deltas() == std::vector<int>{1, 2, 3, 4, 3, 2, 1, 2});
  CHECK(DynkinDiagram(DynkinType(Family::E, 8)).deltas() == std::vector<int>{1, 2, 3, 4, 5, 6, 4, 2, 3});
  CHECK(DynkinDiagram(DynkinType(Family::D, 5)).deltas() == std::vector<int>{1, 1, 2, 2, 1, 1});
  const DynkinDiagram e8(DynkinType(Family::E, 8));
  CHECK(*std::max_element(e8.deltas().begin(), e8.deltas().end()) == 6);
}

TEST_CASE("delta is the null vector of the affine Cartan matrix") {
  for (const auto& t : all_types()) {
    CAPTURE(t.name());
    const DynkinDiagram d(t);
    CHECK(d.delta(0) == 1);
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
      int s = 0;
      for (Vertex w : d.neighbours(v)) s += d.multiplicity(v, w) * d.delta(w);
      CHECK(s == 2 * d.delta(v));
    }
  }
}

TEST_CASE("positive roots match the brute-force oracle") {
  for (const auto& t : all_types()) {
    CAPTURE(t.name());
    const auto roots = positive_roots(t);
    auto sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == brute_force_roots(t));
    // Highest root = δ restricted to the finite vertices.
    const DynkinDiagram d(t);
    CHECK(roots.back().coefficients == std::vector<int>(d.deltas().begin() + 1, d.deltas().end()));
    for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].height() <= roots[i].height());
  }
}

TEST_CASE("positive root counts") {
  const auto count = [](Family f, int n) { return positive_roots(DynkinType(f, n)).size(); };
  for (int n = 1; n <= 8; ++n) CHECK(count(Family::A, n) == static_cast<std::size_t>(n * (n + 1) / 2));
  for (int n = 4; n <= 8; ++n) CHECK(count(Family::D, n) == static_cast<std::size_t>(n * (n - 1)));
  CHECK(count(Family::E, 6) == 36);
  CHECK(count(Family::E, 7) == 63);
  CHECK(count(Family::E, 8) == 120);
}

TEST_CASE("D_n labels and lookups") {
  const DynkinDiagram d5(DynkinType(Family::D, 5));
  CHECK(d5.label(1) == "f1");
  CHECK(d5.label(2) == "h2");
  CHECK(d5.label(3) == "h3");
  CHECK(d5.label(4) == "f2");
  CHECK(d5.label(5) == "f3");
  CHECK(d5.find_label("h3") == 3);
  CHECK(d5.find_label("4") == 4);
  CHECK_FALSE(d5.find_label("h4"));
  CHECK_FALSE(d5.find_label("9"));
}

TEST_CASE("induced dual graphs") {
  const DynkinDiagram d4(DynkinType(Family::D, 4));
  const auto outer = induced_dual_graph(d4, {1, 3, 4});
  CHECK(outer.edges.empty());
  const auto with_hub = induced_dual_graph(d4, {1, 2, 3});
  CHECK(with_hub.edges.size() == 2);
  CHECK_THROWS_AS(induced_dual_graph(d4, {0, 1}), ArgumentError);
  CHECK_THROWS_AS(induced_dual_graph(d4, {7}), ArgumentError);
}

TEST_CASE("automorphism groups fixing the extended vertex") {
  const auto size = [](Family f, int n) { return automorphisms(DynkinDiagram(DynkinType(f, n))).size(); };
  CHECK(size(Family::D, 4) == 6);  // S3 on the three outer leaves
  CHECK(size(Family::D, 5) == 2);
  CHECK(size(Family::E, 6) == 2);
  CHECK(size(Family::E, 7) == 1);
  CHECK(size(Family::E, 8) == 1);
  CHECK(size(Family::A, 4) == 2);  // reflection of the cycle through 0
  CHECK(size(Family::A, 1) == 1);
}
