#pragma once

// Configuration sweep shared by the property suites: every affine ADE type
// of rank <= 8 with 1..4 retained non-extended vertices, in a fixed order.

#include "knitwall/knitting.hpp"

#include <vector>

namespace knitwall::testing {

inline std::vector<DynkinType> sweep_types() {
  std::vector<DynkinType> out;
  for (int n = 1; n <= 8; ++n) out.emplace_back(Family::A, n);
  for (int n = 4; n <= 8; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) out.emplace_back(Family::E, n);
  return out;
}

/// All increasing slot lists of size 1..max_retained.
inline std::vector<Configuration> sweep_configurations(std::size_t max_retained = 4) {
  std::vector<Configuration> out;
  for (const auto& type : sweep_types()) {
    const int n = type.rank();
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, Vertex next) -> void {
      if (!cur.empty()) out.emplace_back(type, cur);
      if (cur.size() == max_retained) return;
      for (Vertex v = next; v <= n; ++v) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec(rec, 1);
  }
  return out;
}

}  // namespace knitwall::testing
