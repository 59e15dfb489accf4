#pragma once

#include "diracforge/characters/character.hpp"
#include "diracforge/lie/pair.hpp"

namespace diracforge::induction {

using lie::Weight;

/// sign * V_mu, or zero when sign == 0.
struct SignedIrrep {
  int sign = 0;
  Weight mu;
};

/// rho_G - rho_H as an H weight (the weight of the top exterior power twist
/// of the spinors of p).
Weight coadjointSpinorShift(const lie::EqualRankPair& pair);

/// Throws ConfigurationError when rho_G - rho_H is not an H lattice weight,
/// i.e. when the adjoint action on p does not lift to the spinors.
void requireSpinPair(const lie::EqualRankPair& pair);

/// xi = lambda_H + rho_H; zero on walls, otherwise sign(w) V_{w xi - rho_G}.
SignedIrrep diracInduct(const lie::EqualRankPair& pair, const Weight& lambdaH);

/// Linear extension. chi may be in either basis; the result is a G
/// decomposition.
characters::FormalCharacter inductCharacter(const lie::EqualRankPair& pair, const characters::FormalCharacter& chi);

/// Windowed extension. The input must be in H's irreducible basis (any basis
/// for a torus) and complete on <lambda, alpha> <= B. The output is a G
/// decomposition complete for dominant mu with
///   <mu, alpha+> <= B + <rho_H, alpha> - <rho_G, alpha+>,
/// alpha+ the dominant G-conjugate of alpha. WindowUnderflow when that bound
/// is negative.
characters::ConeSeries inductSeries(const lie::EqualRankPair& pair, const characters::ConeSeries& sigma);

struct TransferReport {
  long inducedTrivial = 0;  // trivial multiplicity of Ind(chi (x) C_shift) over G
  long originalTrivial = 0;  // trivial multiplicity of chi over H
  Weight shift;
  characters::FormalCharacter induced;
  bool equal = false;
};

/// Compares trivial multiplicities before and after twisted induction. Every
/// highest weight of chi must be G-dominant (NotDominant otherwise): below
/// the dominant chamber the twisted induction picks up signed terms that the
/// comparison does not account for. TransferMismatch on disagreement.
TransferReport multiplicityTransferCheck(const lie::EqualRankPair& pair, const characters::FormalCharacter& chi);

}  // namespace diracforge::induction
