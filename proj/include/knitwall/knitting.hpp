#pragma once

#include "knitwall/dynkin.hpp"

#include <map>
#include <memory>
#include <vector>

namespace knitwall {

/// The retained curves of a partial resolution. Slot k carries the k-th
/// stability coordinate; the extended vertex 0 is implicitly retained and
/// never occupies a slot.
class Configuration {
 public:
  /// Throws ArgumentError if `slots` is empty, repeats a vertex, names
  /// vertex 0 or names a vertex outside the diagram.
  Configuration(DynkinType type, std::vector<Vertex> slots);

  const DynkinDiagram& diagram() const { return *diagram_; }
  const std::vector<Vertex>& slots() const { return slots_; }
  std::size_t size() const { return slots_.size(); }
  Vertex vertex_at(std::size_t slot) const { return slots_.at(slot); }
  /// Slot occupied by v, or -1.
  int slot_of(Vertex v) const;
  std::set<Vertex> retained() const { return {slots_.begin(), slots_.end()}; }
  /// Same slots with one vertex replaced.
  Configuration with_slot(std::size_t slot, Vertex v) const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.diagram_->type() == b.diagram_->type() && a.slots_ == b.slots_;
  }

 private:
  std::shared_ptr<const DynkinDiagram> diagram_;
  std::vector<Vertex> slots_;
};

/// One exchange sequence 0 -> K -> (+) N_j^{b_j} -> N_pivot -> 0 read off
/// from knitting. `b` is keyed by diagram vertex (vertex 0 allowed).
struct ExchangeData {
  std::size_t pivot_slot = 0;
  Vertex pivot_vertex = 0;
  std::map<Vertex, int> b;
  Vertex new_vertex = 0;

  int coefficient(Vertex v) const {
    auto it = b.find(v);
    return it == b.end() ? 0 : it->second;
  }
};

/// Full column sequence of a knitting run. columns[0] is the unit vector at
/// the pivot; columns[k] is the raw vector produced at step k before the
/// circled entries were harvested.
struct KnitTrace {
  struct Step {
    std::vector<int> column;
    std::map<Vertex, int> harvested;
  };
  std::vector<Step> steps;
  ExchangeData result;
};

/// Step cap: 64 * (vertex count) * max delta.
std::size_t knit_step_cap(const DynkinDiagram& diagram);

/// Runs the mesh recurrence x_{k+1} = Adj x̄_k - x̄_{k-1} from the pivot's
/// vertex, harvesting and zeroing circled vertices ({0} and the other
/// retained vertices), until the first negative entry appears.
/// Throws NonTerminationError past the step cap and ConsistencyError if
/// the terminal column is not a single -1.
ExchangeData knit(const Configuration& config, std::size_t pivot_slot);
/// `step_cap` = 0 uses knit_step_cap().
KnitTrace knit_trace(const Configuration& config, std::size_t pivot_slot, std::size_t step_cap = 0);

}  // namespace knitwall
