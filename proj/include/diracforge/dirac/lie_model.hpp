#pragma once

#include "diracforge/clifford/clifford.hpp"
#include "diracforge/lie/root_system.hpp"

#include <memory>
#include <vector>

namespace diracforge::dirac {

using lie::RootSystemPtr;
using lie::Weight;

/// Irreducible module of a simple Lie algebra with exact Chevalley matrices in
/// an orthonormal weight basis for the contravariant form, so that
/// f_i = e_i^dagger. Built weight space by weight space from the Cartan matrix
/// alone: candidates f_i u are compared through the contravariant form and an
/// orthogonal basis is extracted over the rationals before normalizing.
struct HighestWeightModule {
  std::vector<Weight> weights;  // simple coordinates of the factor
  std::vector<SMatrix> e, f;    // one per simple root
  size_t dim() const { return weights.size(); }
};

HighestWeightModule buildHighestWeightModule(const lie::RootSystem& simple, const Weight& lambda, size_t maxDim);

/// Compact real form of g with a deterministic orthonormal basis for the
/// invariant form normalized so that long roots have squared length 2.
///
/// Basis order: for each positive root beta (in the system's order) the pair
/// X_beta = (E - E^dagger)/sqrt(n), Y_beta = i (E + E^dagger)/sqrt(n); then the
/// Cartan elements of each factor (Gram-Schmidt of i h_j for simple factors,
/// the coordinate elements for torus factors). Root pairs come first so that
/// Jordan-Wigner spinors are weight vectors.
class LieAlgebraModel {
 public:
  /// Memoized per root-system label.
  static std::shared_ptr<const LieAlgebraModel> of(const RootSystemPtr& rs);

  struct RootPair {
    size_t root;  // index into system->positiveRoots()
    size_t x, y;  // basis indices
  };

  RootSystemPtr system;
  size_t dim = 0;
  clifford::StructureConstants f;
  std::vector<RootPair> rootPairs;
  std::vector<size_t> cartan;
  /// coordinate_j of a weight vector v is -i times the eigenvalue of
  /// sum_a coordinates(j, a) rho(X_a) on v, for any representation rho.
  SMatrix coordinates;

  /// Weight of every basis vector of a representation given on this basis;
  /// requires the Cartan action to be diagonal.
  std::vector<Weight> weightsOf(const std::vector<SMatrix>& rho) const;

  // Per-factor construction data used by buildLieRep.
  struct FactorData {
    lie::Factor factor;
    RootSystemPtr local;         // the factor on its own
    size_t coordinateOffset = 0;  // first coordinate of the factor block
    std::vector<size_t> localRootOfPair;  // for each global root pair in the factor: local root index
    std::vector<size_t> pairIndices;      // indices into rootPairs
    std::vector<size_t> cartanIndices;    // basis indices of the factor's Cartan elements
    RMatrix cartanCombination;            // X_cartan[a] = sum_j P(a,j) i h_j / sqrt(d_a)
    std::vector<Rational> cartanNorms;    // d_a
    std::vector<Rational> rootNorms;      // n_beta for each local positive root
    std::vector<std::pair<size_t, size_t>> rootRecipe;  // E_beta = [E_i, E_gamma]: (i, gamma) or (i, npos)
  };
  std::vector<FactorData> factors;
};

/// Explicit skew-adjoint representation of g on V_lambda over the model basis.
struct LieRep {
  std::shared_ptr<const LieAlgebraModel> algebra;
  Weight highest;
  size_t dim = 0;
  std::vector<SMatrix> pi;
  std::vector<Weight> weights;
};

constexpr size_t kMaxRepDim = 64;

LieRep buildLieRep(const RootSystemPtr& rs, const Weight& lambda, size_t maxDim = kMaxRepDim);

/// [pi(X_a), pi(X_b)] = sum_c f(a,b,c) pi(X_c) and skew-adjointness.
bool isLieRepresentation(const LieRep& rep);

}  // namespace diracforge::dirac
