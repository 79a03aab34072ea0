#pragma once

// GIT chamber decomposition of the slice algebra, obtained by tracking the
// positive chamber C_+ of every iterated mutation back to the original
// stability coordinates.

#include "knitwall/arrangement.hpp"
#include "knitwall/mutation.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace knitwall {

/// One strict inequality sign * (covector . ϑ) > 0.
struct Inequality {
  Covector covector;
  int sign = 1;

  IntVector oriented() const;
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

struct Chamber {
  std::size_t id = 0;
  /// Slot -> vertex after the mutations in `word`.
  std::vector<Vertex> config;
  DualGraph dual_graph;
  /// Shortest mutation word (0-based slots), lexicographically first.
  std::vector<std::size_t> word;
  /// One inequality per slot, in slot order of the mutated algebra.
  std::vector<Inequality> inequalities;
  /// Sum of the rays; an integer point strictly inside.
  std::vector<Rational> interior_point;
  IntMatrix to_original;
  IntMatrix from_original;
  /// Sign of each wall (in ChamberStructure::walls order) on the chamber.
  std::vector<std::int8_t> signs;

  bool contains(std::span<const std::int64_t> theta) const;
  bool contains(std::span<const Rational> theta) const;
};

/// A codimension-one adjacency between two chambers.
struct SkeletonEdge {
  std::size_t a = 0;
  std::size_t b = 0;  // a < b
  std::size_t wall = 0;  // index into walls
  /// Slot mutated to go from a to b (slot labels of chamber a).
  std::size_t slot_from_a = 0;
  /// Slot mutated to go from b back to a.
  std::size_t slot_from_b = 0;
  bool configuration_changing = false;
  /// A point in the relative interior of the shared facet.
  std::vector<Rational> facet_point;
};

struct ConfigClass {
  std::set<Vertex> vertices;
  DualGraph dual_graph;
  std::size_t multiplicity = 0;
};

struct Bounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

struct OracleCheck {
  std::size_t covector_count = 0;
  std::optional<std::uint64_t> whitney_count;
  std::optional<std::uint64_t> sign_vector_count;
  bool walls_match = false;
};

struct ChamberStructure {
  Configuration config;
  std::vector<Chamber> chambers;
  std::vector<Covector> walls;
  std::vector<SkeletonEdge> skeleton;
  std::vector<ConfigClass> config_classes;
  std::optional<OracleCheck> oracle;
};

struct EnumerateOptions {
  /// Run the arrangement oracle first and require exact agreement.
  bool oracle = true;
  /// Hyperplane budget for the Whitney count; larger arrangements fall
  /// back to sign-vector enumeration with `sign_vector_budget`.
  std::size_t whitney_budget = kSubsetBudget;
  std::size_t sign_vector_budget = 64;
  /// Explicit BFS state cap; 0 means 16 x oracle count (or 1 << 20
  /// without oracle).
  std::size_t state_cap = 0;
};

/// Breadth-first search over single-slot mutations from C_+. Produces the
/// chambers (canonically ordered by word length, then word), walls,
/// skeleton and enhanced configuration data. Throws ConsistencyError if
/// chambers overlap, a wall cuts a chamber, the skeleton disagrees with
/// the mutation graph, or the oracle disagrees; ResourceError past the
/// state cap.
ChamberStructure enumerate_chambers(const Configuration& config, const EnumerateOptions& options = {});

/// Skeleton graph as an adjacency list over chamber ids.
std::vector<std::vector<std::size_t>> skeleton(const ChamberStructure& structure);

/// Distinct retained-vertex sets over all chambers with multiplicities.
std::vector<ConfigClass> enhanced_report(const ChamberStructure& structure);

/// (number of configuration classes, number of chambers).
Bounds bounds(const ChamberStructure& structure);

/// Ids of chambers containing `theta` (empty if theta lies on a wall).
std::vector<std::size_t> chambers_containing(const ChamberStructure& structure,
                                             std::span<const std::int64_t> theta);

}  // namespace knitwall
