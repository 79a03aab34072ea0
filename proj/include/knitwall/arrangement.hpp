#pragma once

// Independent oracle for the chamber decomposition: the positive-root
// hyperplanes restricted to the retained coordinates, and two unrelated
// ways of counting the regions of that central arrangement.

#include "knitwall/dynkin.hpp"
#include "knitwall/linalg.hpp"

#include <cstdint>
#include <vector>

namespace knitwall {

struct RestrictedArrangement {
  std::size_t dim = 0;
  /// Sorted, pairwise distinct, sign-normalized.
  std::vector<Covector> covectors;
};

/// Default subset budget for count_regions and sign_vectors.
inline constexpr std::size_t kSubsetBudget = 24;

/// Restricts every positive root to the retained slots (in slot order),
/// dropping roots supported only on contracted vertices.
RestrictedArrangement restricted_walls(const DynkinDiagram& diagram, const std::vector<Vertex>& slots);

/// Region count Σ_B (-1)^{|B| - rank B} over all subsets B of covectors.
/// Throws ResourceError if there are more than `budget` covectors.
std::uint64_t count_regions(const RestrictedArrangement& arr, std::size_t budget = kSubsetBudget);

/// Sign vector (+1/-1 per covector) of every nonempty open region, found
/// by adding hyperplanes one at a time and splitting regions they cut.
/// Sorted lexicographically. Throws ResourceError past `budget`.
std::vector<std::vector<std::int8_t>> sign_vectors(const RestrictedArrangement& arr,
                                                   std::size_t budget = kSubsetBudget);

}  // namespace knitwall
