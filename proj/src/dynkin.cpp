#include "knitwall/dynkin.hpp"

#include "knitwall/errors.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>

namespace knitwall {

DynkinType::DynkinType(Family family, int rank) : family_(family), rank_(rank) {
  const bool ok = (family == Family::A && rank >= 1) || (family == Family::D && rank >= 4) ||
                  (family == Family::E && rank >= 6 && rank <= 8);
  if (!ok) throw ArgumentError("no Dynkin diagram of type " + name());
}

DynkinType DynkinType::parse(const std::string& name) {
  if (name.size() < 2) throw ArgumentError("unknown diagram '" + name + "'");
  Family family;
  switch (name[0]) {
    case 'A': family = Family::A; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    default: throw ArgumentError("unknown diagram '" + name + "'");
  }
  int rank = 0;
  const auto* first = name.data() + 1;
  const auto* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, rank);
  if (ec != std::errc() || ptr != last || name[1] == '0')
    throw ArgumentError("unknown diagram '" + name + "'");
  return DynkinType(family, rank);
}

std::string DynkinType::name() const {
  const char letter = family_ == Family::A ? 'A' : family_ == Family::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(rank_);
}

DynkinDiagram::DynkinDiagram(DynkinType type) : type_(type) {
  const int n = type.rank();
  adjacency_.assign(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
  neighbours_.resize(static_cast<std::size_t>(n + 1));
  delta_.assign(static_cast<std::size_t>(n + 1), 1);

  switch (type.family()) {
    case Family::A:
      if (n == 1) {
        add_edge(0, 1, 2);
      } else {
        for (int v = 1; v < n; ++v) add_edge(v, v + 1);
        add_edge(0, 1);
        add_edge(0, n);
      }
      break;
    case Family::D: {
      for (int h = 2; h <= n - 2; ++h) delta_[static_cast<std::size_t>(h)] = 2;
      for (int h = 2; h < n - 2; ++h) add_edge(h, h + 1);
      add_edge(0, 2);
      add_edge(1, 2);
      add_edge(n - 1, n - 2);
      add_edge(n, n - 2);
      break;
    }
    case Family::E: {
      // Chain 1..n-1 plus branch vertex n; delta listed per vertex 0..n.
      static const std::vector<int> e6 = {1, 1, 2, 3, 2, 1, 2};
      static const std::vector<int> e7 = {1, 2, 3, 4, 3, 2, 1, 2};
      static const std::vector<int> e8 = {1, 2, 3, 4, 5, 6, 4, 2, 3};
      for (int v = 1; v < n - 1; ++v) add_edge(v, v + 1);
      if (n == 6) {
        add_edge(6, 3);
        add_edge(0, 6);
        delta_ = e6;
      } else if (n == 7) {
        add_edge(7, 3);
        add_edge(0, 1);
        delta_ = e7;
      } else {
        add_edge(8, 5);
        add_edge(0, 1);
        delta_ = e8;
      }
      break;
    }
  }
}

void DynkinDiagram::add_edge(Vertex u, Vertex v, int mult) {
  adjacency_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] += mult;
  adjacency_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] += mult;
  neighbours_[static_cast<std::size_t>(u)].push_back(v);
  neighbours_[static_cast<std::size_t>(v)].push_back(u);
}

int DynkinDiagram::multiplicity(Vertex u, Vertex v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) throw ArgumentError("unknown vertex");
  return adjacency_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

const std::vector<Vertex>& DynkinDiagram::neighbours(Vertex v) const {
  if (!valid_vertex(v)) throw ArgumentError("unknown vertex " + std::to_string(v));
  return neighbours_[static_cast<std::size_t>(v)];
}

std::vector<std::tuple<Vertex, Vertex, int>> DynkinDiagram::edges() const {
  std::vector<std::tuple<Vertex, Vertex, int>> out;
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v = u + 1; v < vertex_count(); ++v)
      if (int m = multiplicity(u, v); m > 0) out.emplace_back(u, v, m);
  return out;
}

std::string DynkinDiagram::label(Vertex v) const {
  if (!valid_vertex(v)) throw ArgumentError("unknown vertex " + std::to_string(v));
  if (v == 0 || type_.family() != Family::D) return std::to_string(v);
  const int n = rank();
  if (v == 1) return "f1";
  if (v == n - 1) return "f2";
  if (v == n) return "f3";
  return "h" + std::to_string(v);
}

std::optional<Vertex> DynkinDiagram::find_label(const std::string& text) const {
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (label(v) == text) return v;
  int index = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), index);
  if (ec == std::errc() && ptr == text.data() + text.size() && valid_vertex(index)) return index;
  return std::nullopt;
}

std::vector<std::vector<int>> DynkinDiagram::finite_cartan() const {
  const int n = rank();
  std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = i == j ? 2 : -multiplicity(i, j);
  return c;
}

int RootVector::height() const {
  int h = 0;
  for (int c : coefficients) h += c;
  return h;
}

DynkinDiagram build_diagram(DynkinType type) { return DynkinDiagram(type); }

std::vector<RootVector> positive_roots(const DynkinType& type) {
  const DynkinDiagram diagram(type);
  const auto cartan = diagram.finite_cartan();
  const auto n = static_cast<std::size_t>(type.rank());

  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> simple(n, 0);
    simple[i] = 1;
    seen.insert(simple);
    queue.push_back(simple);
  }
  // s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i; keep positive images.
  while (!queue.empty()) {
    const auto alpha = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += alpha[j] * cartan[j][i];
      if (pairing == 0) continue;
      auto image = alpha;
      image[i] -= pairing;
      if (image[i] < 0) continue;
      if (seen.insert(image).second) queue.push_back(image);
    }
  }

  std::vector<RootVector> roots;
  roots.reserve(seen.size());
  for (const auto& c : seen) roots.push_back(RootVector{c});
  std::sort(roots.begin(), roots.end(), [](const RootVector& a, const RootVector& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coefficients < b.coefficients;
  });
  return roots;
}

DualGraph induced_dual_graph(const DynkinDiagram& diagram, const std::set<Vertex>& retained) {
  DualGraph g;
  for (Vertex v : retained) {
    if (v == 0) throw ArgumentError("the extended vertex 0 cannot be a retained curve");
    if (!diagram.valid_vertex(v)) throw ArgumentError("unknown vertex " + std::to_string(v));
    g.vertices.push_back(v);
  }
  for (auto it = retained.begin(); it != retained.end(); ++it)
    for (auto jt = std::next(it); jt != retained.end(); ++jt)
      if (diagram.multiplicity(*it, *jt) > 0) g.edges.emplace_back(*it, *jt);
  return g;
}

std::vector<std::vector<Vertex>> automorphisms(const DynkinDiagram& diagram) {
  const int count = diagram.vertex_count();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> image(static_cast<std::size_t>(count), -1);
  std::vector<bool> used(static_cast<std::size_t>(count), false);
  image[0] = 0;
  used[0] = true;

  std::function<void(Vertex)> extend = [&](Vertex v) {
    if (v == count) {
      out.push_back(image);
      return;
    }
    for (Vertex w = 1; w < count; ++w) {
      if (used[static_cast<std::size_t>(w)] || diagram.delta(w) != diagram.delta(v)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u)
        ok = diagram.multiplicity(u, v) == diagram.multiplicity(image[static_cast<std::size_t>(u)], w);
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      extend(v + 1);
      used[static_cast<std::size_t>(w)] = false;
    }
  };
  extend(1);
  return out;
}

}  // namespace knitwall
