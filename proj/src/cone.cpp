#include "knitwall/cone.hpp"

#include "knitwall/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <set>

namespace knitwall {

namespace {

using System = std::set<IntVector>;

namespace mp = boost::multiprecision;

mp::cpp_int floor_of(const Rational& q) {
  const mp::cpp_int n = mp::numerator(q);
  const mp::cpp_int d = mp::denominator(q);
  mp::cpp_int f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

// Picks a value strictly between the bounds, preferring small integers.
Rational pick_between(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (!lo && !hi) return 1;
  if (lo && !hi) return Rational(floor_of(*lo) + 1);
  if (!lo && hi) return Rational(-floor_of(-*hi) - 1);
  const Rational candidate = Rational(floor_of(*lo) + 1);
  if (candidate < *hi) return candidate;
  return (*lo + *hi) / 2;
}

// Eliminates the last variable. Returns false if a trivially false
// constraint (0 > 0) appears.
bool eliminate_last(const System& in, std::size_t width, System& out) {
  const std::size_t last = width - 1;
  std::vector<const IntVector*> pos, neg;
  out.clear();
  for (const auto& row : in) {
    if (row[last] > 0)
      pos.push_back(&row);
    else if (row[last] < 0)
      neg.push_back(&row);
    else {
      IntVector r(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(last));
      if (gcd_of(r) == 0) return false;
      out.insert(primitive(std::move(r)));
    }
  }
  for (const auto* p : pos)
    for (const auto* n : neg) {
      const auto a = (*p)[last];
      const auto b = -(*n)[last];
      IntVector r(last);
      for (std::size_t j = 0; j < last; ++j)
        r[j] = checked_add(checked_mul(b, (*p)[j]), checked_mul(a, (*n)[j]));
      if (gcd_of(r) == 0) return false;
      out.insert(primitive(std::move(r)));
    }
  return true;
}

// Runs the full elimination; levels[k] holds the system in x_0..x_{k-1}.
bool eliminate_all(std::span<const IntVector> rows, std::size_t dim, std::vector<System>& levels) {
  levels.assign(dim + 1, {});
  for (const auto& row : rows) {
    if (row.size() != dim) throw ArgumentError("cone row has wrong dimension");
    if (gcd_of(row) == 0) return false;
    levels[dim].insert(primitive(row));
  }
  for (std::size_t width = dim; width > 0; --width)
    if (!eliminate_last(levels[width], width, levels[width - 1])) return false;
  return levels[0].empty();
}

}  // namespace

std::optional<std::vector<Rational>> strict_cone_point(std::span<const IntVector> rows, std::size_t dim) {
  std::vector<System> levels;
  if (!eliminate_all(rows, dim, levels)) return std::nullopt;

  std::vector<Rational> x;
  x.reserve(dim);
  for (std::size_t width = 1; width <= dim; ++width) {
    const std::size_t var = width - 1;
    std::optional<Rational> lo, hi;
    for (const auto& row : levels[width]) {
      Rational rest = 0;
      for (std::size_t j = 0; j < var; ++j)
        if (row[j] != 0) rest += row[j] * x[j];
      const auto a = row[var];
      if (a == 0) continue;
      const Rational bound = -rest / a;
      if (a > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else if (!hi || bound < *hi) {
        hi = bound;
      }
    }
    if (lo && hi && !(*lo < *hi))
      throw ConsistencyError("Fourier-Motzkin back-substitution found an empty interval");
    x.push_back(pick_between(lo, hi));
  }
  return x;
}

bool strict_cone_feasible(std::span<const IntVector> rows, std::size_t dim) {
  std::vector<System> levels;
  return eliminate_all(rows, dim, levels);
}

std::optional<std::vector<Rational>> face_point(std::span<const IntVector> rows, const IntVector& equality) {
  const std::size_t dim = equality.size();
  std::size_t pivot = 0;
  while (pivot < dim && equality[pivot] == 0) ++pivot;
  if (pivot == dim) throw ArgumentError("face_point: zero equality");

  // Substitute x_pivot = -(sum_{j != pivot} e_j x_j) / e_pivot; scaling by
  // |e_pivot| keeps every inequality's direction.
  const auto e = equality[pivot];
  const std::int64_t scale = e > 0 ? e : -e;
  const std::int64_t sgn = e > 0 ? 1 : -1;
  std::vector<IntVector> reduced;
  for (const auto& row : rows) {
    if (row.size() != dim) throw ArgumentError("cone row has wrong dimension");
    IntVector r;
    r.reserve(dim - 1);
    for (std::size_t j = 0; j < dim; ++j) {
      if (j == pivot) continue;
      r.push_back(checked_add(checked_mul(scale, row[j]), -checked_mul(sgn * row[pivot], equality[j])));
    }
    reduced.push_back(std::move(r));
  }
  auto sub = strict_cone_point(reduced, dim - 1);
  if (!sub) return std::nullopt;

  std::vector<Rational> x(dim);
  Rational rest = 0;
  for (std::size_t j = 0, k = 0; j < dim; ++j) {
    if (j == pivot) continue;
    x[j] = (*sub)[k++];
    rest += equality[j] * x[j];
  }
  x[pivot] = -rest / e;
  return x;
}

std::vector<std::size_t> irredundant_rows(std::span<const IntVector> rows, std::size_t dim) {
  std::vector<std::size_t> keep;
  std::set<IntVector> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!seen.insert(primitive(rows[i])).second) continue;
    std::vector<IntVector> test;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i && primitive(rows[j]) != primitive(rows[i])) test.push_back(rows[j]);
    IntVector flipped = rows[i];
    for (auto& c : flipped) c = -c;
    test.push_back(std::move(flipped));
    if (strict_cone_feasible(test, dim)) keep.push_back(i);
  }
  return keep;
}

}  // namespace knitwall
