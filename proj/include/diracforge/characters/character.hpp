#pragma once

#include "diracforge/lie/pair.hpp"
#include "diracforge/lie/root_system.hpp"

#include <map>
#include <optional>
#include <string>

namespace diracforge::characters {

using lie::RootSystemPtr;
using lie::Weight;

class CharacterCache;

enum class Basis { Weight, Irreducible };

std::string_view basisName(Basis b);

/// Finitely supported integer combination of weights (Basis::Weight) or of
/// irreducible representations labelled by highest weight (Basis::Irreducible).
struct FormalCharacter {
  RootSystemPtr system;
  Basis basis = Basis::Weight;
  std::map<Weight, long> entries;  // no stored zeros

  FormalCharacter() = default;
  FormalCharacter(RootSystemPtr rs, Basis b) : system(std::move(rs)), basis(b) {}

  void add(const Weight& w, long m);
  long at(const Weight& w) const;
  bool empty() const { return entries.empty(); }
  long dimension() const;  // sum of multiplicities (weight basis)
  bool isWeylInvariant() const;
  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.basis == b.basis && a.entries == b.entries;
  }
};

/// Truncated element of the completed representation ring: exact coefficients
/// on the half-space <lambda, polarizer> <= window (and >= floor when set).
/// offset, when set, certifies that the full series is supported on
/// <lambda, polarizer> >= -offset.
struct ConeSeries {
  RootSystemPtr system;
  Basis basis = Basis::Weight;
  std::map<Weight, long> entries;
  Weight polarizer;
  std::optional<Rational> offset;
  Rational window = 0;
  std::optional<Rational> floor;

  Rational pairing(const Weight& w) const { return system->inner(w, polarizer); }
  bool inWindow(const Weight& w) const;
  void add(const Weight& w, long m);
  long at(const Weight& w) const;
  /// Stored weights respect the declared support bound and the window.
  void validate() const;
};

/// Exact weight multiplicities of the irreducible module with highest weight
/// lambda, by Freudenthal's recursion on dominant weights. Torus coordinates
/// ride along unchanged.
FormalCharacter irreducibleCharacter(const RootSystemPtr& rs, const Weight& lambda,
                                     CharacterCache* cache = nullptr);

/// Weyl dimension formula.
Integer weylDimension(const RootSystemPtr& rs, const Weight& lambda);

/// Expand an irreducible-basis character into weights.
FormalCharacter toWeightBasis(const FormalCharacter& chi, CharacterCache* cache = nullptr);

/// Greedy highest-weight peeling of a W-invariant weight-basis character.
FormalCharacter decompose(const FormalCharacter& chi, CharacterCache* cache = nullptr);

FormalCharacter multiply(const FormalCharacter& a, const FormalCharacter& b);

FormalCharacter tensorDecompose(const RootSystemPtr& rs, const Weight& lambda, const Weight& mu,
                                CharacterCache* cache = nullptr);

/// V_lambda restricted to H, in H's irreducible basis.
FormalCharacter restrictCharacter(const lie::EqualRankPair& pair, const Weight& lambdaG,
                                  CharacterCache* cache = nullptr);

/// Coefficient of the trivial representation.
long trivialMultiplicity(const FormalCharacter& decomposition);

/// Highest weight of the dual of V_lambda.
Weight dualHighestWeight(const RootSystemPtr& rs, const Weight& lambda);

struct PolarizationReport {
  bool polarized = true;
  std::optional<Weight> witness;
};

/// Every stored weight with nonzero coefficient pairs >= 0 (strict: > 0) with
/// alpha. alpha must be a positive multiple of the series' polarizer so that
/// the window is meaningful; a window below 0 cannot certify anything.
PolarizationReport isPolarized(const ConeSeries& sigma, const Weight& alpha, bool strict);

}  // namespace diracforge::characters
