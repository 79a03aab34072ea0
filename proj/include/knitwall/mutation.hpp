#pragma once

#include "knitwall/knitting.hpp"
#include "knitwall/linalg.hpp"

#include <vector>

namespace knitwall {

/// Stability parameter in slot coordinates ϑ_1..ϑ_r. The vertex-0
/// coordinate is implicit: ϑ_0 = -Σ δ_k ϑ_k.
using StabilityVector = std::vector<Rational>;

/// Dimension vector β_0..β_r; entry 0 belongs to the extended vertex.
using DimensionVector = std::vector<std::int64_t>;

/// The rank vector (1; δ of each slot's vertex).
DimensionVector rank_vector(const Configuration& config);

/// Wall-crossing matrix of one exchange: identity except column `pivot`,
/// which holds b_t in row t and -1 on the diagonal. It is an involution.
IntMatrix exchange_matrix(const Configuration& config, const ExchangeData& b);

/// (ν ϑ)_t = ϑ_t + b_t ϑ_i for t != i, (ν ϑ)_i = -ϑ_i.
StabilityVector nu_theta(const Configuration& config, const ExchangeData& b, const StabilityVector& theta);

/// (ν β)_i = Σ_{j != i} b_j β_j - β_i (including b_0 β_0); other entries
/// unchanged. Throws DomainError if the new entry would be negative.
DimensionVector nu_beta(const Configuration& config, const ExchangeData& b, const DimensionVector& beta);

/// Σ_{t>=0} ϑ_t β_t with ϑ_0 reconstructed from the rank vector, so that
/// pairing(ϑ, rk) = 0 for every ϑ.
Rational pairing(const Configuration& config, const StabilityVector& theta, const DimensionVector& beta);

/// A configuration reached by mutation together with its chart back to
/// the original stability coordinates.
struct MutationState {
  Configuration config;
  /// Sends current-coordinate stability vectors to original coordinates;
  /// its columns are the rays of the pulled-back C_+.
  IntMatrix to_original;
  /// Inverse of to_original; its rows are the inequalities of the
  /// pulled-back C_+ (region = {ϑ : from_original ϑ > 0}).
  IntMatrix from_original;
  std::vector<std::size_t> word;

  static MutationState initial(const Configuration& config);
};

/// Knits at `slot`, replaces the slot's vertex, composes the chart and
/// appends the slot to the word.
MutationState mutate(const MutationState& state, std::size_t slot);

/// As mutate, reusing an already computed exchange for `slot`.
MutationState mutate_with(const MutationState& state, const ExchangeData& exchange);

}  // namespace knitwall
