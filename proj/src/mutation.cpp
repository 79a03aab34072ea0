#include "knitwall/mutation.hpp"

#include "knitwall/errors.hpp"

namespace knitwall {

namespace {

void require_exchange_matches(const Configuration& config, const ExchangeData& b) {
  if (b.pivot_slot >= config.size() || config.vertex_at(b.pivot_slot) != b.pivot_vertex)
    throw ArgumentError("exchange data does not belong to this configuration");
  for (const auto& [v, c] : b.b)
    if (v != 0 && config.slot_of(v) < 0)
      throw ArgumentError("exchange coefficient on vertex " + std::to_string(v) + " outside the configuration");
}

}  // namespace

DimensionVector rank_vector(const Configuration& config) {
  DimensionVector rk{1};
  for (Vertex v : config.slots()) rk.push_back(config.diagram().delta(v));
  return rk;
}

IntMatrix exchange_matrix(const Configuration& config, const ExchangeData& b) {
  require_exchange_matches(config, b);
  const auto r = config.size();
  auto m = IntMatrix::identity(r);
  const auto i = b.pivot_slot;
  for (std::size_t t = 0; t < r; ++t)
    if (t != i) m(t, i) = b.coefficient(config.vertex_at(t));
  m(i, i) = -1;
  return m;
}

StabilityVector nu_theta(const Configuration& config, const ExchangeData& b, const StabilityVector& theta) {
  if (theta.size() != config.size())
    throw ArgumentError("stability vector has " + std::to_string(theta.size()) + " coordinates, expected " +
                        std::to_string(config.size()));
  return exchange_matrix(config, b).apply(theta);
}

DimensionVector nu_beta(const Configuration& config, const ExchangeData& b, const DimensionVector& beta) {
  require_exchange_matches(config, b);
  if (beta.size() != config.size() + 1)
    throw ArgumentError("dimension vector has " + std::to_string(beta.size()) + " entries, expected " +
                        std::to_string(config.size() + 1));
  const auto i = b.pivot_slot + 1;
  std::int64_t sum = checked_mul(b.coefficient(0), beta[0]);
  for (std::size_t t = 1; t < beta.size(); ++t)
    if (t != i) sum = checked_add(sum, checked_mul(b.coefficient(config.vertex_at(t - 1)), beta[t]));
  sum = checked_add(sum, -beta[i]);
  if (sum < 0)
    throw DomainError("ν_β would make entry " + std::to_string(i) + " negative (" + std::to_string(sum) + ")");
  auto out = beta;
  out[i] = sum;
  return out;
}

Rational pairing(const Configuration& config, const StabilityVector& theta, const DimensionVector& beta) {
  if (theta.size() != config.size() || beta.size() != config.size() + 1)
    throw ArgumentError("pairing: length mismatch");
  Rational theta0 = 0;
  for (std::size_t k = 0; k < theta.size(); ++k) theta0 -= config.diagram().delta(config.vertex_at(k)) * theta[k];
  Rational s = theta0 * beta[0];
  for (std::size_t k = 0; k < theta.size(); ++k) s += theta[k] * beta[k + 1];
  return s;
}

MutationState MutationState::initial(const Configuration& config) {
  return {config, IntMatrix::identity(config.size()), IntMatrix::identity(config.size()), {}};
}

MutationState mutate_with(const MutationState& state, const ExchangeData& exchange) {
  const auto m = exchange_matrix(state.config, exchange);
  MutationState next{state.config.with_slot(exchange.pivot_slot, exchange.new_vertex),
                     state.to_original * m, m * state.from_original, state.word};
  next.word.push_back(exchange.pivot_slot);
  return next;
}

MutationState mutate(const MutationState& state, std::size_t slot) {
  return mutate_with(state, knit(state.config, slot));
}

}  // namespace knitwall
