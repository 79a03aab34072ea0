#include "knitwall/chambers.hpp"

#include "knitwall/cone.hpp"
#include "knitwall/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace knitwall {

IntVector Inequality::oriented() const {
  IntVector v = covector.coeffs();
  if (sign < 0)
    for (auto& x : v) x = -x;
  return v;
}

bool Chamber::contains(std::span<const std::int64_t> theta) const {
  for (std::size_t r = 0; r < from_original.rows(); ++r)
    if (dot(from_original.row(r), theta) <= 0) return false;
  return true;
}

bool Chamber::contains(std::span<const Rational> theta) const {
  for (std::size_t r = 0; r < from_original.rows(); ++r)
    if (dot(from_original.row(r), theta) <= 0) return false;
  return true;
}

namespace {

struct StateKey {
  std::vector<Vertex> slots;
  IntMatrix chart;
  friend auto operator<=>(const StateKey&, const StateKey&) = default;
};

struct SignHash {
  std::size_t operator()(const std::vector<std::int8_t>& s) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : s) h = (h ^ static_cast<std::size_t>(x + 2)) * 1099511628211ull;
    return h;
  }
};

std::string word_string(const std::vector<std::size_t>& word) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i] + 1;
  os << "]";
  return os.str();
}

// Relative-interior point of the facet of `a` on `wall`, checked against
// both chambers. The sum of the rays of `a` off the wall is tried first;
// Fourier-Motzkin decides if that certificate fails.
std::optional<std::vector<Rational>> shared_facet_point(const Chamber& a, const Chamber& b, const Covector& wall) {
  std::vector<IntVector> rows;
  for (const auto* c : {&a, &b})
    for (const auto& ineq : c->inequalities)
      if (ineq.covector != wall) rows.push_back(ineq.oriented());

  const std::size_t r = a.to_original.rows();
  for (std::size_t k = 0; k < a.inequalities.size(); ++k) {
    if (a.inequalities[k].covector != wall) continue;
    IntVector p(r, 0);
    for (std::size_t c = 0; c < a.to_original.cols(); ++c) {
      const auto ray = a.to_original.column(c);
      if (dot(wall.coeffs(), ray) == 0)
        for (std::size_t i = 0; i < r; ++i) p[i] = checked_add(p[i], ray[i]);
    }
    bool ok = dot(wall.coeffs(), p) == 0;
    for (const auto& row : rows) ok = ok && dot(row, p) > 0;
    if (ok) return std::vector<Rational>(p.begin(), p.end());
  }
  return face_point(rows, wall.coeffs());
}

OracleCheck run_oracle(const Configuration& config, const EnumerateOptions& options,
                       RestrictedArrangement& arr) {
  arr = restricted_walls(config.diagram(), config.slots());
  OracleCheck check;
  check.covector_count = arr.covectors.size();
  if (arr.covectors.size() <= options.whitney_budget)
    check.whitney_count = count_regions(arr, options.whitney_budget);
  else
    check.sign_vector_count = sign_vectors(arr, options.sign_vector_budget).size();
  return check;
}

}  // namespace

ChamberStructure enumerate_chambers(const Configuration& config, const EnumerateOptions& options) {
  ChamberStructure out{config, {}, {}, {}, {}, std::nullopt};
  const std::size_t r = config.size();

  RestrictedArrangement arr;
  std::uint64_t expected = 0;
  if (options.oracle) {
    out.oracle = run_oracle(config, options, arr);
    expected = out.oracle->whitney_count ? *out.oracle->whitney_count : *out.oracle->sign_vector_count;
  }
  const std::size_t cap =
      options.state_cap ? options.state_cap : options.oracle ? 16 * expected : std::size_t{1} << 20;

  // Breadth-first search over mutation states.
  std::vector<MutationState> states;
  std::map<StateKey, std::size_t> index;
  std::map<std::vector<Vertex>, std::vector<ExchangeData>> exchange_cache;
  std::vector<std::vector<std::size_t>> successor;  // successor[state][slot]

  const auto exchanges_for = [&](const Configuration& c) -> const std::vector<ExchangeData>& {
    auto it = exchange_cache.find(c.slots());
    if (it != exchange_cache.end()) return it->second;
    std::vector<ExchangeData> ex;
    for (std::size_t s = 0; s < c.size(); ++s) ex.push_back(knit(c, s));
    return exchange_cache.emplace(c.slots(), std::move(ex)).first->second;
  };

  states.push_back(MutationState::initial(config));
  index.emplace(StateKey{config.slots(), states.front().to_original}, 0);
  for (std::size_t head = 0; head < states.size(); ++head) {
    successor.emplace_back(r, 0);
    const auto& ex = exchanges_for(states[head].config);
    for (std::size_t s = 0; s < r; ++s) {
      auto next = mutate_with(states[head], ex[s]);
      StateKey key{next.config.slots(), next.to_original};
      auto [it, inserted] = index.emplace(std::move(key), states.size());
      if (inserted) {
        if (states.size() >= cap)
          throw ResourceError("chamber search exceeded the state cap of " + std::to_string(cap));
        states.push_back(std::move(next));
      }
      successor[head][s] = it->second;
    }
  }

  // Canonical order: word length, then lexicographic word.
  std::vector<std::size_t> order(states.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& wa = states[a].word;
    const auto& wb = states[b].word;
    if (wa.size() != wb.size()) return wa.size() < wb.size();
    return wa < wb;
  });
  std::vector<std::size_t> rank_of_state(states.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank_of_state[order[i]] = i;

  // Chambers and walls.
  std::set<Covector> wall_set;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& st = states[order[i]];
    const auto det = determinant(st.to_original);
    if (det != 1 && det != -1)
      throw ConsistencyError("chart of chamber " + word_string(st.word) + " is not unimodular");
    Chamber ch;
    ch.id = i;
    ch.config = st.config.slots();
    ch.dual_graph = induced_dual_graph(config.diagram(), st.config.retained());
    ch.word = st.word;
    ch.to_original = st.to_original;
    ch.from_original = st.from_original;

    std::vector<IntVector> rows;
    for (std::size_t k = 0; k < r; ++k) rows.push_back(st.from_original.row(k));
    for (auto k : irredundant_rows(rows, r)) {
      Inequality ineq{Covector(rows[k]), Covector::orientation_of(primitive(rows[k]))};
      wall_set.insert(ineq.covector);
      ch.inequalities.push_back(std::move(ineq));
    }
    IntVector ones(r, 1);
    const auto p = st.to_original.apply(ones);
    ch.interior_point.assign(p.begin(), p.end());
    if (!ch.contains(std::span<const std::int64_t>(p)))
      throw ConsistencyError("interior point of chamber " + word_string(ch.word) + " fails its inequalities");
    out.chambers.push_back(std::move(ch));
  }
  out.walls.assign(wall_set.begin(), wall_set.end());

  // Sign vectors; every wall must have constant sign on each chamber.
  std::unordered_map<std::vector<std::int8_t>, std::size_t, SignHash> by_signs;
  for (auto& ch : out.chambers) {
    ch.signs.reserve(out.walls.size());
    for (const auto& w : out.walls) {
      bool pos = false, neg = false;
      for (std::size_t c = 0; c < r; ++c) {
        const auto v = dot(w.coeffs(), ch.to_original.column(c));
        pos |= v > 0;
        neg |= v < 0;
      }
      if (pos && neg)
        throw ConsistencyError("wall " + w.pretty() + " cuts chamber " + word_string(ch.word));
      ch.signs.push_back(pos ? 1 : -1);
    }
    auto [it, inserted] = by_signs.emplace(ch.signs, ch.id);
    if (!inserted)
      throw ConsistencyError("chambers " + word_string(out.chambers[it->second].word) + " and " +
                             word_string(ch.word) + " overlap");
  }

  if (out.oracle) {
    out.oracle->walls_match = arr.covectors == out.walls;
    if (!out.oracle->walls_match)
      throw ConsistencyError("chamber walls differ from the restricted root arrangement for " +
                             config.diagram().type().name());
    if (out.chambers.size() != expected)
      throw ConsistencyError("mutation search found " + std::to_string(out.chambers.size()) +
                             " chambers but the arrangement has " + std::to_string(expected) + " regions");
  }

  // Skeleton: sign vectors differing in one wall, with a feasible facet.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> mutation_edges;
  for (std::size_t s = 0; s < states.size(); ++s)
    for (std::size_t slot = 0; slot < r; ++slot) {
      const auto a = rank_of_state[s];
      const auto b = rank_of_state[successor[s][slot]];
      if (a == b) throw ConsistencyError("mutation left a chamber unchanged");
      mutation_edges[{a, b}] = slot;
    }
  for (const auto& ch : out.chambers) {
    for (std::size_t w = 0; w < out.walls.size(); ++w) {
      auto flipped = ch.signs;
      flipped[w] = static_cast<std::int8_t>(-flipped[w]);
      auto it = by_signs.find(flipped);
      if (it == by_signs.end() || it->second < ch.id) continue;
      const auto& other = out.chambers[it->second];
      auto facet = shared_facet_point(ch, other, out.walls[w]);
      if (!facet)
        throw ConsistencyError("chambers " + word_string(ch.word) + " and " + word_string(other.word) +
                               " differ in one wall but share no facet");
      auto fwd = mutation_edges.find({ch.id, other.id});
      auto back = mutation_edges.find({other.id, ch.id});
      if (fwd == mutation_edges.end() || back == mutation_edges.end())
        throw ConsistencyError("adjacent chambers " + word_string(ch.word) + " and " + word_string(other.word) +
                               " are not related by a single mutation");
      SkeletonEdge e;
      e.a = ch.id;
      e.b = other.id;
      e.wall = w;
      e.slot_from_a = fwd->second;
      e.slot_from_b = back->second;
      e.configuration_changing = std::set<Vertex>(ch.config.begin(), ch.config.end()) !=
                                 std::set<Vertex>(other.config.begin(), other.config.end());
      e.facet_point = std::move(*facet);
      out.skeleton.push_back(std::move(e));
    }
  }
  if (out.skeleton.size() * 2 != mutation_edges.size())
    throw ConsistencyError("skeleton has " + std::to_string(out.skeleton.size()) + " edges but the mutation graph has " +
                           std::to_string(mutation_edges.size() / 2));

  out.config_classes = enhanced_report(out);
  return out;
}

std::vector<std::vector<std::size_t>> skeleton(const ChamberStructure& structure) {
  std::vector<std::vector<std::size_t>> adj(structure.chambers.size());
  for (const auto& e : structure.skeleton) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& n : adj) std::sort(n.begin(), n.end());
  return adj;
}

std::vector<ConfigClass> enhanced_report(const ChamberStructure& structure) {
  std::map<std::set<Vertex>, std::size_t> counts;
  for (const auto& ch : structure.chambers) ++counts[std::set<Vertex>(ch.config.begin(), ch.config.end())];
  std::vector<ConfigClass> out;
  for (const auto& [vertices, n] : counts)
    out.push_back({vertices, induced_dual_graph(structure.config.diagram(), vertices), n});
  return out;
}

Bounds bounds(const ChamberStructure& structure) {
  return {enhanced_report(structure).size(), structure.chambers.size()};
}

std::vector<std::size_t> chambers_containing(const ChamberStructure& structure,
                                             std::span<const std::int64_t> theta) {
  std::vector<std::size_t> out;
  for (const auto& ch : structure.chambers)
    if (ch.contains(theta)) out.push_back(ch.id);
  return out;
}

}  // namespace knitwall
