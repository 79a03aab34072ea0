#pragma once

// Affine ADE Dynkin diagrams with a fixed canonical labeling.
//
// Vertex 0 is always the extended vertex (delta = 1). Non-extended
// vertices are labelled as follows:
//
//   A_n   path 1-2-...-n; vertex 0 adjacent to 1 and n
//         (n = 1: a double edge 0=1).
//   D_n   vertex 1 = f1, vertices 2..n-2 = hub chain h2..h{n-2} (delta 2),
//         vertex n-1 = f2, vertex n = f3. Leaves {0, f1} hang off h2 and
//         {f2, f3} hang off h{n-2}.
//   E_n   finite chain 1..n-1 numbered from the end nearest vertex 0,
//         branch vertex n last.
//           E6: chain 1-2-3-4-5, branch 6 on 3, vertex 0 on 6.
//           E7: chain 1-...-6,   branch 7 on 3, vertex 0 on 1.
//           E8: chain 1-...-7,   branch 8 on 5, vertex 0 on 1.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace knitwall {

using Vertex = int;

enum class Family { A, D, E };

class DynkinType {
 public:
  /// Throws ArgumentError for pairs outside A_{n>=1}, D_{n>=4}, E_{6,7,8}.
  DynkinType(Family family, int rank);
  /// Parses names such as "A3", "D5", "E7".
  static DynkinType parse(const std::string& name);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
  friend bool operator==(const DynkinType&, const DynkinType&) = default;

 private:
  Family family_;
  int rank_;
};

class DynkinDiagram {
 public:
  explicit DynkinDiagram(DynkinType type);

  const DynkinType& type() const { return type_; }
  /// Number of vertices including the extended vertex (rank + 1).
  int vertex_count() const { return static_cast<int>(delta_.size()); }
  int rank() const { return type_.rank(); }

  int delta(Vertex v) const { return delta_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& deltas() const { return delta_; }

  /// Edge multiplicity between u and v (0 if not adjacent).
  int multiplicity(Vertex u, Vertex v) const;
  /// Neighbours of v, each listed once (multiplicity via multiplicity()).
  const std::vector<Vertex>& neighbours(Vertex v) const;
  /// Unordered edges (u < v) with their multiplicity.
  std::vector<std::tuple<Vertex, Vertex, int>> edges() const;

  /// Canonical label ("0", "3", "f1", "h2", ...).
  std::string label(Vertex v) const;
  /// Resolves a canonical label or a decimal vertex index.
  std::optional<Vertex> find_label(const std::string& label) const;
  bool valid_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }

  /// Cartan matrix of the finite diagram, indexed by vertices 1..n
  /// (entry [i-1][j-1]).
  std::vector<std::vector<int>> finite_cartan() const;

 private:
  void add_edge(Vertex u, Vertex v, int mult = 1);

  DynkinType type_;
  std::vector<int> delta_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<Vertex>> neighbours_;
};

/// Coefficients of a positive root in the simple-root basis, indexed by
/// vertices 1..n (entry k-1 is the coefficient of vertex k).
struct RootVector {
  std::vector<int> coefficients;

  int at(Vertex v) const { return coefficients.at(static_cast<std::size_t>(v - 1)); }
  int height() const;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
  friend bool operator==(const RootVector&, const RootVector&) = default;
};

/// Undirected graph on a subset of diagram vertices.
struct DualGraph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

DynkinDiagram build_diagram(DynkinType type);

/// All positive roots of the finite root system, closed under simple
/// reflections starting from the simple roots. Sorted by height, then
/// lexicographically.
std::vector<RootVector> positive_roots(const DynkinType& type);

/// Induced subgraph of the finite diagram on `retained`.
/// Throws ArgumentError if `retained` contains vertex 0 or an unknown vertex.
DualGraph induced_dual_graph(const DynkinDiagram& diagram, const std::set<Vertex>& retained);

/// Diagram automorphisms of the affine diagram that fix vertex 0, as
/// vertex permutations (always includes the identity).
std::vector<std::vector<Vertex>> automorphisms(const DynkinDiagram& diagram);

}  // namespace knitwall
