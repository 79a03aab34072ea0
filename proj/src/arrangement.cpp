#include "knitwall/arrangement.hpp"

#include "knitwall/cone.hpp"
#include "knitwall/errors.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>

namespace knitwall {

RestrictedArrangement restricted_walls(const DynkinDiagram& diagram, const std::vector<Vertex>& slots) {
  for (Vertex v : slots)
    if (v <= 0 || !diagram.valid_vertex(v)) throw ArgumentError("invalid retained vertex " + std::to_string(v));
  std::set<Covector> unique;
  for (const auto& root : positive_roots(diagram.type())) {
    IntVector c;
    c.reserve(slots.size());
    for (Vertex v : slots) c.push_back(root.at(v));
    if (gcd_of(c) == 0) continue;
    unique.insert(Covector(std::move(c)));
  }
  return {slots.size(), {unique.begin(), unique.end()}};
}

namespace {

void check_budget(const RestrictedArrangement& arr, std::size_t budget) {
  if (arr.covectors.size() > budget)
    throw ResourceError(std::to_string(arr.covectors.size()) + " hyperplanes exceed the subset budget of " +
                        std::to_string(budget) + "; use sign-vector enumeration with a larger budget");
}

// Sum of (-1)^{|B| - rank B} over B = chosen ∪ S, S ⊆ covectors[next..].
std::int64_t whitney_sum(const std::vector<Covector>& cs, std::size_t next, const EchelonBasis& basis,
                         std::size_t chosen) {
  const std::size_t remaining = cs.size() - next;
  const auto parity = [](std::int64_t k) { return k % 2 == 0 ? 1 : -1; };
  const auto here = parity(static_cast<std::int64_t>(chosen) - static_cast<std::int64_t>(basis.rank()));
  // Once the rank is full every extension keeps it, and the alternating
  // sum over a nonempty set of extensions vanishes.
  if (basis.rank() == basis.dim()) return remaining == 0 ? here : 0;
  if (remaining == 0) return here;
  std::int64_t total = whitney_sum(cs, next + 1, basis, chosen);
  EchelonBasis with = basis;
  with.insert(cs[next].coeffs());
  total += whitney_sum(cs, next + 1, with, chosen + 1);
  return total;
}

}  // namespace

std::uint64_t count_regions(const RestrictedArrangement& arr, std::size_t budget) {
  check_budget(arr, budget);
  const auto total = whitney_sum(arr.covectors, 0, EchelonBasis(arr.dim), 0);
  if (total <= 0) throw ConsistencyError("Whitney sum produced a nonpositive region count");
  return static_cast<std::uint64_t>(total);
}

std::vector<std::vector<std::int8_t>> sign_vectors(const RestrictedArrangement& arr, std::size_t budget) {
  check_budget(arr, budget);
  // Each region keeps its irredundant facet rows and an integer point
  // strictly inside it.
  struct Region {
    std::vector<std::int8_t> signs;
    std::vector<IntVector> facets;
    IntVector point;
  };
  std::vector<Region> regions{Region{{}, {}, IntVector(arr.dim, 1)}};

  const auto prune = [&](std::vector<IntVector> rows) {
    std::vector<IntVector> kept;
    for (auto i : irredundant_rows(rows, arr.dim)) kept.push_back(rows[i]);
    return kept;
  };
  // Interior point of {rows > 0} scaled to a primitive integer vector.
  const auto integer_point = [&](const std::vector<IntVector>& rows) -> std::optional<IntVector> {
    auto q = strict_cone_point(rows, arr.dim);
    if (!q) return std::nullopt;
    boost::multiprecision::cpp_int l = 1;
    for (const auto& x : *q) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    IntVector p;
    for (const auto& x : *q) {
      const boost::multiprecision::cpp_int v = boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x));
      if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw ResourceError("interior point exceeds int64");
      p.push_back(static_cast<std::int64_t>(v));
    }
    return primitive(std::move(p));
  };

  for (const auto& cov : arr.covectors) {
    const IntVector& plus = cov.coeffs();
    IntVector minus = plus;
    for (auto& x : minus) x = -x;
    std::vector<Region> next;
    next.reserve(regions.size() * 2);
    for (auto& region : regions) {
      const auto side = dot(plus, region.point);
      auto with_plus = region.facets;
      with_plus.push_back(plus);
      auto with_minus = region.facets;
      with_minus.push_back(minus);

      std::optional<IntVector> p_plus, p_minus;
      if (side > 0)
        p_plus = region.point;
      else
        p_plus = integer_point(with_plus);
      if (side < 0)
        p_minus = region.point;
      else
        p_minus = integer_point(with_minus);

      if (p_plus && p_minus) {
        Region a{region.signs, prune(std::move(with_plus)), std::move(*p_plus)};
        a.signs.push_back(1);
        Region b{std::move(region.signs), prune(std::move(with_minus)), std::move(*p_minus)};
        b.signs.push_back(-1);
        next.push_back(std::move(a));
        next.push_back(std::move(b));
      } else if (p_plus || p_minus) {
        region.signs.push_back(p_plus ? 1 : -1);
        next.push_back(std::move(region));
      } else {
        throw ConsistencyError("region lies inside a hyperplane; open cone was empty");
      }
    }
    regions = std::move(next);
  }

  std::vector<std::vector<std::int8_t>> out;
  out.reserve(regions.size());
  for (auto& r : regions) out.push_back(std::move(r.signs));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace knitwall
