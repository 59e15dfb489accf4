#pragma once

#include "diracforge/exact/matrix.hpp"
#include "diracforge/exact/rational.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace diracforge::lie {

enum class Family { A, B, C, D, Torus };

std::string_view familyName(Family f);
Family parseFamily(std::string_view s);

struct Factor {
  Family family;
  int rank;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Weights are plain coordinate vectors. For a simple factor the coordinates
/// are the pairings with the simple coroots (fundamental-weight coordinates);
/// torus coordinates follow the semisimple block of each factor.
using Weight = RVec;

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Product of simple reflections; word[0] acts first.
struct WeylElement {
  std::vector<size_t> word;

  int sign() const { return word.size() % 2 ? -1 : 1; }
  Weight act(const RootSystem& rs, Weight w) const;
};

class RootSystem {
 public:
  /// Generic constructor. simpleRoots are given in the coordinate system;
  /// corootCoordinate[i] is the coordinate holding the pairing with the i-th
  /// simple coroot. lattice columns generate the group's weight lattice.
  RootSystem(std::string label, std::vector<Factor> factors, std::vector<Weight> simpleRoots,
             std::vector<size_t> corootCoordinate, RMatrix gram, RMatrix lattice);

  static RootSystemPtr build(Family family, int rank);
  static RootSystemPtr product(const std::vector<Factor>& factors);
  /// "A2", "A1xT1", "T3", "B2xA1" ...
  static RootSystemPtr parse(std::string_view label);
  /// {"factors":[{"family":"A","rank":2},{"family":"Torus","rank":1}]}
  static RootSystemPtr fromJson(std::string_view json);
  std::string toJson() const;

  const std::string& label() const { return label_; }
  size_t rank() const { return gram_.rows(); }
  size_t semisimpleRank() const { return simpleRoots_.size(); }
  const std::vector<Factor>& factors() const { return factors_; }
  const std::vector<Weight>& simpleRoots() const { return simpleRoots_; }
  const std::vector<Weight>& positiveRoots() const { return positiveRoots_; }
  /// Coefficients of each positive root in the simple roots.
  const std::vector<std::vector<long>>& positiveRootCoefficients() const { return rootCoefficients_; }
  const RMatrix& cartanMatrix() const { return cartan_; }
  const RMatrix& gram() const { return gram_; }
  const RMatrix& lattice() const { return lattice_; }
  const Weight& rho() const { return rho_; }
  size_t simpleCoordinate(size_t i) const { return corootCoordinate_[i]; }
  bool isTorusCoordinate(size_t j) const;

  Weight zero() const { return Weight(rank(), 0); }
  Weight fundamentalWeight(size_t i) const;
  Weight rhoFromRoots() const;
  Weight rhoFromFundamentals() const;

  void check(const Weight& w) const;  // SystemMismatch on wrong length
  Rational inner(const Weight& a, const Weight& b) const;
  Rational norm2(const Weight& a) const { return inner(a, a); }
  /// <w, alpha^vee> = 2 (w, alpha) / (alpha, alpha)
  Rational corootPairing(const Weight& w, const Weight& alpha) const;

  Weight reflect(size_t i, Weight w) const;
  bool isDominant(const Weight& w) const;
  bool isRegular(const Weight& w) const;
  /// Integer pairings with every simple coroot.
  bool isAlgebraicallyIntegral(const Weight& w) const;
  /// Member of the group's weight lattice.
  bool isLatticeWeight(const Weight& w) const;

  /// Greedy reduction to the dominant chamber. The word has minimal length.
  std::pair<Weight, WeylElement> makeDominant(Weight w) const;
  std::vector<Weight> weylOrbit(const Weight& w) const;  // sorted, no duplicates
  size_t weylOrder() const { return weylOrder_; }

  /// Index of a root (positive or negative) among positive roots, with sign.
  /// Returns {index, +1|-1} or {npos, 0} when w is not a root.
  std::pair<size_t, int> findRoot(const Weight& w) const;

 private:
  void computePositiveRoots();

  std::string label_;
  std::vector<Factor> factors_;
  std::vector<Weight> simpleRoots_;
  std::vector<size_t> corootCoordinate_;
  RMatrix gram_;
  RMatrix lattice_;
  RMatrix latticeInverse_;
  RMatrix cartan_;
  std::vector<Weight> positiveRoots_;
  std::vector<std::vector<long>> rootCoefficients_;
  Weight rho_;
  size_t weylOrder_ = 1;
};

/// Number of positive roots expected for a simple factor.
size_t expectedPositiveRoots(const Factor& f);

}  // namespace diracforge::lie
