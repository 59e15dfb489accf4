#pragma once

#include "diracforge/characters/character.hpp"
#include "diracforge/dirac/lie_model.hpp"
#include "diracforge/lie/pair.hpp"

#include <optional>
#include <string>
#include <vector>

namespace diracforge::dirac {

struct DiracOperator {
  SMatrix matrix;                 // on V (x) S, V index major
  std::optional<SMatrix> grading;  // 1 (x) grading of S, when S is graded
  Weight lambda;
  Rational q;
  std::string label;  // system or pair label
  bool relative = false;
};

/// sum_i pi(X_i) (x) c(X_i) + q * 1 (x) sum_i ad(X_i) c(X_i).
DiracOperator cubicDirac(const LieRep& rep, const clifford::CliffordModule& cl, const Rational& q);

/// Exact self-adjointness, and oddness when graded.
bool isSelfAdjoint(const DiracOperator& d);
bool isOdd(const DiracOperator& d);

struct CasimirReading {
  std::string name;         // which Casimir and which coefficient
  bool constant = false;    // D^2 - coefficient * Cas is a multiple of 1
  std::optional<Scalar> remainder;
};

struct KostantReport {
  std::string label;
  Weight lambda;
  bool isScalar = false;
  Rational scalar;          // D^2 on V_lambda (x) S_g
  Rational expected;        // |lambda + rho|^2
  bool matchesNorm = false;
  Rational rhoNorm2;        // |rho|^2
  Rational adjointTrace;    // tr of Cas_g on g (adjoint representation)
  Rational moduleTrace;     // tr of the diagonal Cas_g on V (x) S
  std::vector<CasimirReading> readings;
};

/// Builds S_g and the cubic operator at q = 1/3, asserts D^2 is scalar and
/// records how it compares with |lambda + rho|^2 and with Casimir readings.
/// NotScalar when D^2 is not a multiple of the identity.
KostantReport verifyKostantIdentity(const LieRep& rep);

/// The pieces of g = h + p needed for the relative operator.
struct PairModel {
  lie::EqualRankPair pair;
  std::shared_ptr<const LieAlgebraModel> algebra;
  std::vector<size_t> hIndices, pIndices;  // model basis indices
  clifford::CliffordModule sp;
  /// ad^p(X_a) on S_p for every g basis element (h acts, p is projected).
  std::vector<SMatrix> adP;
  SMatrix grading;  // on S_p, with rho_G - rho_H in the +1 eigenspace
  std::vector<Weight> spinorWeights;  // G coordinates
};

PairModel makePairModel(const lie::EqualRankPair& pair);

struct RelativeOperator {
  DiracOperator op;
  LieRep rep;
  std::vector<SMatrix> hAction;  // on V (x) S_p, indexed by g basis; empty for p elements
  std::vector<Weight> hWeights;  // H coordinates of the tensor basis
  std::vector<int> parity;       // grading of the tensor basis vectors
};

/// sum over p of pi(X_i) (x) c(X_i) + 1 (x) (1/3) sum over p of ad^p(X_i) c(X_i).
/// checkSymmetries verifies self-adjointness, oddness and H-equivariance.
RelativeOperator relativeCubicDirac(const PairModel& pm, const Weight& lambdaG, bool checkSymmetries = true);

struct SpectralBlock {
  Weight mu;  // H highest weight
  long multiplicity = 0;
  Rational scalar;
  Rational expected;
  bool match = false;
};

struct SpectralReport {
  std::string pair;
  Weight lambda;
  std::vector<SpectralBlock> blocks;
  std::vector<Weight> kernel;  // mu with zero scalar
  bool allMatch = true;
};

/// D^2 on each H-isotypic block of V_lambda (x) S_p against
/// |lambda + rho_G|^2 - |mu + rho_H|^2. SpectralMismatch on any difference.
SpectralReport spectralCheckRelative(const PairModel& pm, const Weight& lambdaG);

/// Graded kernel multiplicities of the twisted operators, summed into a
/// virtual G-representation. W is an H-character in the irreducible basis.
/// Searches every dominant lambda with |lambda + rho_G|^2 <= |mu + rho_H|^2.
characters::FormalCharacter kernelIndex(const PairModel& pm, const characters::FormalCharacter& w);

/// Dominant weights of a semisimple system with |lambda + rho|^2 <= bound.
std::vector<Weight> dominantBall(const lie::RootSystem& rs, const Rational& bound);

}  // namespace diracforge::dirac
