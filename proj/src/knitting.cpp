#include "knitwall/knitting.hpp"

#include "knitwall/errors.hpp"

#include <algorithm>
#include <sstream>

namespace knitwall {

Configuration::Configuration(DynkinType type, std::vector<Vertex> slots)
    : diagram_(std::make_shared<const DynkinDiagram>(type)), slots_(std::move(slots)) {
  if (slots_.empty()) throw ArgumentError("configuration needs at least one retained vertex");
  std::set<Vertex> seen;
  for (Vertex v : slots_) {
    if (v == 0) throw ArgumentError("the extended vertex 0 cannot occupy a slot");
    if (!diagram_->valid_vertex(v))
      throw ArgumentError("vertex " + std::to_string(v) + " is not in " + type.name());
    if (!seen.insert(v).second) throw ArgumentError("vertex " + std::to_string(v) + " retained twice");
  }
}

int Configuration::slot_of(Vertex v) const {
  auto it = std::find(slots_.begin(), slots_.end(), v);
  return it == slots_.end() ? -1 : static_cast<int>(it - slots_.begin());
}

Configuration Configuration::with_slot(std::size_t slot, Vertex v) const {
  auto copy = *this;
  copy.slots_.at(slot) = v;
  return copy;
}

std::size_t knit_step_cap(const DynkinDiagram& diagram) {
  const auto& d = diagram.deltas();
  return 64 * static_cast<std::size_t>(diagram.vertex_count()) *
         static_cast<std::size_t>(*std::max_element(d.begin(), d.end()));
}

namespace {

std::string describe_trace(const KnitTrace& trace) {
  std::ostringstream os;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    os << "  x" << k << " =";
    for (int x : trace.steps[k].column) os << ' ' << x;
    os << '\n';
    if (k > 16 && k + 4 < trace.steps.size()) {
      os << "  ...\n";
      k = trace.steps.size() - 4;
    }
  }
  return os.str();
}

}  // namespace

KnitTrace knit_trace(const Configuration& config, std::size_t pivot_slot, std::size_t step_cap) {
  if (pivot_slot >= config.size())
    throw ArgumentError("pivot slot " + std::to_string(pivot_slot + 1) + " out of range");
  const auto& diagram = config.diagram();
  const auto count = static_cast<std::size_t>(diagram.vertex_count());
  const Vertex pivot = config.vertex_at(pivot_slot);

  std::vector<bool> circled(count, false);
  circled[0] = true;
  for (Vertex v : config.slots())
    if (v != pivot) circled[static_cast<std::size_t>(v)] = true;

  KnitTrace trace;
  trace.result.pivot_slot = pivot_slot;
  trace.result.pivot_vertex = pivot;

  std::vector<int> previous(count, 0);  // x̄_{k-1}
  std::vector<int> current(count, 0);   // x̄_k
  current[static_cast<std::size_t>(pivot)] = 1;
  trace.steps.push_back({current, {}});

  const auto cap = step_cap ? step_cap : knit_step_cap(diagram);
  for (std::size_t step = 1; step <= cap; ++step) {
    std::vector<int> next(count, 0);
    for (std::size_t v = 0; v < count; ++v) {
      int sum = -previous[v];
      for (Vertex w : diagram.neighbours(static_cast<Vertex>(v)))
        sum += diagram.multiplicity(static_cast<Vertex>(v), w) * current[static_cast<std::size_t>(w)];
      next[v] = sum;
    }

    KnitTrace::Step record{next, {}};
    std::vector<Vertex> negatives;
    for (std::size_t v = 0; v < count; ++v)
      if (next[v] < 0) negatives.push_back(static_cast<Vertex>(v));

    if (!negatives.empty()) {
      trace.steps.push_back(std::move(record));
      if (negatives.size() != 1 || next[static_cast<std::size_t>(negatives.front())] != -1)
        throw ConsistencyError("knitting ended without a single -1 entry:\n" + describe_trace(trace));
      trace.result.new_vertex = negatives.front();
      if (trace.result.b.empty())
        throw ConsistencyError("knitting produced an empty approximation:\n" + describe_trace(trace));
      return trace;
    }

    for (std::size_t v = 0; v < count; ++v) {
      if (!circled[v] || next[v] == 0) continue;
      record.harvested[static_cast<Vertex>(v)] = next[v];
      trace.result.b[static_cast<Vertex>(v)] += next[v];
      next[v] = 0;
    }
    trace.steps.push_back(std::move(record));
    previous = std::move(current);
    current = std::move(next);
  }
  throw NonTerminationError("knitting exceeded " + std::to_string(cap) + " steps for " +
                            diagram.type().name() + " pivot slot " + std::to_string(pivot_slot + 1) +
                            ":\n" + describe_trace(trace));
}

ExchangeData knit(const Configuration& config, std::size_t pivot_slot) {
  return knit_trace(config, pivot_slot).result;
}

}  // namespace knitwall
