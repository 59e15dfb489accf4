#pragma once

#include "diracforge/characters/character.hpp"

#include <string>
#include <vector>

namespace diracforge::qr {

using characters::ConeSeries;
using characters::FormalCharacter;
using lie::Weight;

/// {x : <x, normal> >= -offset}
struct HalfSpace {
  Weight normal;  // primitive integer vector
  Rational offset;
};

struct ToricVertex {
  Weight point;
  std::vector<Weight> edges;  // primitive, pointing into the polytope
  std::vector<size_t> facets;  // active half-spaces
};

/// Moment polytope of a smooth compact toric manifold. Vertices and edge
/// weights are derived from the half-spaces by buildToricModel.
struct ToricModel {
  size_t dimension = 0;
  std::vector<HalfSpace> halfSpaces;
  std::vector<ToricVertex> vertices;

  bool prequantized() const;  // integral offsets
  lie::RootSystemPtr torus() const;
};

/// Validates boundedness, simplicity and the Delzant condition
/// (ConfigurationError otherwise).
ToricModel buildToricModel(size_t dimension, std::vector<HalfSpace> halfSpaces);

ToricModel projectiveLine(long k);  // [0, k]
ToricModel projectivePlane(long k);  // x, y >= 0, x + y <= k
/// Hirzebruch polygon 0 <= y <= b, 0 <= x, x + r y <= a (a > r b).
ToricModel hirzebruch(long r, long a, long b);
ToricModel toricPoint();
/// Image under x -> m x for m in GL(n, Z).
ToricModel transformModel(const ToricModel& model, const RMatrix& m);

/// {"halfspaces":[{"normal":[1,0],"offset":"0"},...]}, optional "dimension".
ToricModel parseToricModel(const std::string& json, const std::string& source = "<model>");
std::string toricModelJson(const ToricModel& model);

/// Lattice points of the polytope. NotPrequantized for fractional offsets.
FormalCharacter toricQuantization(const ToricModel& model);

/// Sum over vertices of e^{v} prod_j (1 - e^{e_j})^{-1}, each factor expanded
/// polarized by xi, exact on <lambda, xi> <= window. NonGenericDirection when
/// xi is orthogonal to an edge.
ConeSeries fixedPointCharacter(const ToricModel& model, const Weight& xi, const Rational& window);

/// Circle weights k = <lambda, xi> - c of a torus character.
std::map<Rational, long> pushToCircle(const std::map<Weight, long>& entries, const Weight& xi, const Rational& c);

struct KirwanComponent {
  Weight alpha;  // critical value of the shifted circle moment map (rank one)
  ConeSeries localSeries;  // circle series, polarizer sign(alpha)
  bool containsZero = false;
  std::vector<size_t> vertices;  // fixed points in the component
};

struct CircleDecomposition {
  Weight xi;
  Rational c;
  Rational low, high;  // every localSeries is exact on low <= k <= high
  ConeSeries global;  // circle image of fixedPointCharacter
  std::vector<KirwanComponent> components;
};

/// Components of the circle action generated by xi with moment map
/// <x, xi> - c: one per nonzero critical value, plus the part at 0 when 0 is
/// in the image. Fixed points must be isolated (NonGenericDirection); c on a
/// vertex value raises SingularShift. margin widens the certified range past
/// the critical values.
CircleDecomposition kirwanDecomposeCircle(const ToricModel& model, const Weight& xi, const Rational& c,
                                          const Rational& margin = 2);

/// Coefficientwise sum of the components on [low, high].
std::map<Rational, long> componentSum(const CircleDecomposition& d);

struct ComponentCheck {
  Rational alpha;
  long coefficientAtZero = 0;
};

struct QRReport {
  long mult0 = 0;  // weight-0 coefficient of the quantization
  long reduced = 0;  // lattice points of the reduced slice
  long zeroComponent = 0;  // weight-0 coefficient of the component at 0
  bool sumMatches = false;  // components add up to the lattice-point character
  std::vector<ComponentCheck> components;
  bool ok = false;
};

/// Lattice points of the slice {<x, xi> = c}.
long sliceLatticeCount(const ToricModel& model, const Weight& xi, const Rational& c);

/// Character-level quantization commutes with reduction for the circle xi at
/// level c. QRViolation with the failing component on any mismatch.
QRReport qrCheckCircle(const ToricModel& model, const Weight& xi, const Rational& c);

struct CoadjointModel {
  lie::RootSystemPtr system;
  Weight lambda;  // regular dominant integral
};

/// Induction from the maximal torus of C_lambda twisted by rho_G - rho_T.
/// ConventionMismatch unless the result is exactly V_lambda.
FormalCharacter coadjointQuantization(const CoadjointModel& model);

struct ProductReport {
  long quantized = 0;  // trivial multiplicity of V_lambda (x) V_mu^*
  long reduced = 0;  // 1 when lambda = mu, else 0
  bool equal = false;
};

/// QRViolation when the two sides differ.
ProductReport productQRCheck(const lie::RootSystemPtr& rs, const Weight& lambda, const Weight& mu);

}  // namespace diracforge::qr
