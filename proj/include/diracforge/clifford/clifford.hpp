#pragma once

#include "diracforge/exact/matrix.hpp"

#include <optional>
#include <vector>

namespace diracforge::clifford {

/// Complex Clifford module for R^n with c(e)^2 = -|e|^2. Generators come from
/// a Jordan-Wigner construction: pair k acts as i Z..Z X 1..1 and
/// i Z..Z Y 1..1, and for odd n the last generator is i Z..Z. The module has
/// dimension 2^floor(n/2); even n carries the grading Z..Z.
struct CliffordModule {
  size_t n = 0;
  std::vector<SMatrix> gamma;
  std::optional<SMatrix> grading;

  size_t spinorDim() const { return size_t{1} << (n / 2); }
  /// c(sum a_i e_i).
  SMatrix of(const std::vector<Scalar>& coefficients) const;
};

constexpr size_t kMaxCliffordDim = 12;

CliffordModule buildClifford(size_t n);

/// gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij, and the grading squares to
/// one, anticommutes with every generator and has balanced eigenspaces.
bool satisfiesCliffordRelations(const CliffordModule& cl);

/// Only scalars commute with every generator (exact commutant computation).
/// Restricted to n <= 8 to keep the linear system small.
bool isIrreducible(const CliffordModule& cl);

/// f(a,b,c) with [X_a, X_b] = sum_c f(a,b,c) X_c in an orthonormal basis.
struct StructureConstants {
  size_t dim = 0;
  std::vector<Scalar> values;

  StructureConstants() = default;
  explicit StructureConstants(size_t d) : dim(d), values(d * d * d) {}
  Scalar& operator()(size_t a, size_t b, size_t c) { return values[(a * dim + b) * dim + c]; }
  const Scalar& operator()(size_t a, size_t b, size_t c) const { return values[(a * dim + b) * dim + c]; }
  /// Restriction to a subset of basis indices (e.g. the p part of g = h + p).
  StructureConstants restrictTo(const std::vector<size_t>& idx) const;
};

/// Antisymmetry in (a,b), invariance of the form (antisymmetry in (b,c)) and
/// the Jacobi identity. Throws BadStructureConstants with the first failure.
void validateStructureConstants(const StructureConstants& f);

enum class SpinConvention {
  /// ad(X) = (1/4) sum_i c(X_i) c([X, X_i]); satisfies [ad(X), c(Y)] = c([X,Y])
  /// when c(e)^2 = -|e|^2.
  Equivariant,
  /// ad(X) = (1/4) sum_i c([X, X_i]) c(X_i), the same expression with the
  /// factors swapped; equal to minus the equivariant one.
  Literal,
};

std::string_view conventionName(SpinConvention c);

/// Spin representation ad(X_a) of every basis element, on the spinors of the
/// whole algebra.
std::vector<SMatrix> spinRepresentation(const StructureConstants& f, const CliffordModule& cl,
                                        SpinConvention convention = SpinConvention::Equivariant);

/// ad(X) for X ranging over all basis elements of a larger algebra, acting on
/// the spinors of the subspace `sub` (X must preserve sub, e.g. h acting on p).
std::vector<SMatrix> spinRepresentationOn(const StructureConstants& f, const std::vector<size_t>& sub,
                                          const CliffordModule& cl,
                                          SpinConvention convention = SpinConvention::Equivariant);

/// S_g as the graded tensor product S_h (x) S_p for g = h + p orthogonal.
struct SplitSpinors {
  std::vector<size_t> hIndices, pIndices;
  CliffordModule sh, sp;
  /// c(X) on S_h (x) S_p: c_h(X) (x) G_p for X in h, 1 (x) c_p(X) for X in p.
  std::vector<SMatrix> tensorGamma;
  /// Sign applied to G_p in tensorGamma (flipped if needed for odd dim g).
  int gradingSign = 1;
  /// U with U c_g(X) = c_tensor(X) U for every basis X, when computed.
  std::optional<SMatrix> changeOfBasis;
};

/// g-basis indices split into h and p. NotOrthogonal when the index sets
/// overlap or miss a basis element; NotOrthogonal also when [h, p] leaves p.
SplitSpinors splitClifford(const StructureConstants& f, const std::vector<size_t>& hIndices,
                           const std::vector<size_t>& pIndices);

}  // namespace diracforge::clifford
