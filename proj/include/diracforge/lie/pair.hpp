#pragma once

#include "diracforge/lie/root_system.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace diracforge::lie {

/// An equal-rank subgroup H of G obtained by deleting simple nodes (a Levi
/// subgroup). Deleting every node gives the maximal torus, deleting none
/// gives H = G.
///
/// H coordinates: pairings with the surviving simple coroots, then one torus
/// coordinate per deleted node (the orthogonal projection onto the span of the
/// deleted fundamental weights, scaled to be integral on the G lattice), then
/// any torus coordinates G already had.
struct EqualRankPair {
  RootSystemPtr g;
  RootSystemPtr h;
  std::vector<size_t> removedNodes;
  RMatrix toH;  // H coordinates = toH * G coordinates
  RMatrix toG;
  /// For each positive root of H, the index of the same root among G's positive roots.
  std::vector<size_t> hRootInG;
  /// G positive roots that are not H roots; their +/- span p tensor C.
  std::vector<size_t> pRootsInG;
  std::string label;

  Weight mapToH(const Weight& wG) const;
  Weight mapToG(const Weight& wH) const;
  bool isHRoot(size_t gRootIndex) const;
  /// H-weights of p tensor C: plus and minus each root in pRootsInG.
  std::vector<Weight> pWeights() const;
};

EqualRankPair makeLeviPair(RootSystemPtr g, std::vector<size_t> removedNodes);

/// "A1:T" (torus), "A2:A2" (H = G), "A2:A1xT1" (matched by factor type) or
/// "A2:levi=2" (delete node 2, one-based).
EqualRankPair parsePair(std::string_view spec);

}  // namespace diracforge::lie

namespace diracforge::lie {

/// Root system for a label, including the H labels produced by pairs such as
/// "A1xT1<A2:2>".
RootSystemPtr resolveSystem(std::string_view label);

}  // namespace diracforge::lie
