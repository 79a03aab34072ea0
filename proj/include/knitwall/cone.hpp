#pragma once

// Exact feasibility for open polyhedral cones {x : a_i . x > 0} by
// Fourier-Motzkin elimination over the integers, with rational
// back-substitution for an interior point.

#include "knitwall/linalg.hpp"

#include <optional>
#include <span>
#include <vector>

namespace knitwall {

/// A point strictly inside {x : row . x > 0 for all rows}, or nullopt if
/// the open cone is empty. With no rows the origin-free point (1,..,1) is
/// returned.
std::optional<std::vector<Rational>> strict_cone_point(std::span<const IntVector> rows, std::size_t dim);

bool strict_cone_feasible(std::span<const IntVector> rows, std::size_t dim);

/// A point with equality . x = 0 and row . x > 0 for every row, i.e. a
/// relative-interior point of the face cut out by `equality`.
std::optional<std::vector<Rational>> face_point(std::span<const IntVector> rows, const IntVector& equality);

/// Indices of rows that are facets of the (assumed nonempty) open cone:
/// row i is kept iff {others > 0, row_i < 0} is feasible. Duplicate rows
/// keep their first occurrence only.
std::vector<std::size_t> irredundant_rows(std::span<const IntVector> rows, std::size_t dim);

}  // namespace knitwall
