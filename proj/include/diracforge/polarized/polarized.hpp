#pragma once

#include "diracforge/characters/character.hpp"

#include <optional>
#include <vector>

namespace diracforge::polarized {

using characters::ConeSeries;
using characters::FormalCharacter;
using lie::Weight;

/// Torus of the given rank with the standard gram matrix; all series in this
/// module live on it.
lie::RootSystemPtr torusOfRank(size_t rank);

/// Expansion of prod_i (1 - e^{-w_i})^{-1} whose support pairs >= 0 with
/// alpha. Per factor: <w, alpha> < 0 gives sum_{k>=0} e^{-k w}; <w, alpha> > 0
/// gives -sum_{k>=1} e^{k w}. Exact on <lambda, alpha> <= window. The result
/// is multiplied back by the product and checked against 1 before returning.
/// rank fixes the torus when the fiber is empty.
ConeSeries polarizedExpand(const std::vector<Weight>& fiberWeights, const Weight& alpha, const Rational& window,
                           std::optional<size_t> rank = std::nullopt);

/// prod_i (1 - e^{-w_i}) * series, compared with 1 wherever every term of the
/// product is known. Returns false on any disagreement.
bool multiplyBackIsOne(const ConeSeries& series, const std::vector<Weight>& fiberWeights);

/// e^{shift} * polarizedExpand(...). The window refers to the unshifted
/// expansion; the output window is window + <shift, alpha>.
ConeSeries vectorSpaceIndex(const std::vector<Weight>& fiberWeights, const Weight& alpha, const Weight& shift,
                            const Rational& window, std::optional<size_t> rank = std::nullopt);

/// Convolution of a finite base character with vectorSpaceIndex. The output
/// window is the largest one on which every product term is known. With
/// requirePolarized, a base carrying nonzero weights is rejected
/// (NonTrivialBaseAction) since only a trivial base action keeps the
/// polarization of the fiber.
ConeSeries bundleIndex(const FormalCharacter& base, const std::vector<Weight>& fiberWeights, const Weight& alpha,
                       const Weight& shift, const Rational& window, bool requirePolarized = true);

struct VanishingReport {
  bool polarized = true;
  bool strict = false;
  long trivialCoefficient = 0;
  std::optional<Weight> witness;
};

/// isPolarized plus, in strict mode, a zero coefficient at the origin.
/// PolarizationViolated (with the witness in the message) on failure.
VanishingReport vanishingCheck(const ConeSeries& series, const Weight& alpha, bool strict);

}  // namespace diracforge::polarized
