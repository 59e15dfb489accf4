#include "doctest.h"

#include "diracforge/characters/character.hpp"
#include "diracforge/clifford/clifford.hpp"
#include "diracforge/dirac/lie_model.hpp"
#include "diracforge/errors.hpp"

using namespace diracforge;
using namespace diracforge::clifford;
using namespace diracforge::dirac;
using lie::RootSystem;

namespace {

Weight w(std::initializer_list<long> xs) {
  Weight out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

SMatrix cliffordBracket(const StructureConstants& f, const CliffordModule& cl, size_t a, size_t b) {
  std::vector<Scalar> coeffs(f.dim);
  for (size_t c = 0; c < f.dim; ++c) coeffs[c] = f(a, b, c);
  return cl.of(coeffs);
}

}  // namespace

TEST_CASE("Clifford modules") {
  auto one = buildClifford(1);
  REQUIRE(one.gamma.size() == 1);
  CHECK(one.gamma[0].rows() == 1);
  CHECK(one.gamma[0](0, 0) == Scalar::i());
  CHECK_FALSE(one.grading);

  auto two = buildClifford(2);
  CHECK(two.gamma[0].rows() == 2);
  CHECK(two.gamma[0] * two.gamma[1] == -(two.gamma[1] * two.gamma[0]));
  CHECK(two.gamma[0] * two.gamma[0] == Scalar(-1) * SMatrix::identity(2));
  CHECK(two.grading.has_value());

  auto three = buildClifford(3);
  CHECK(three.gamma.size() == 3);
  CHECK(three.gamma[2].rows() == 2);
  CHECK_FALSE(three.grading);

  for (size_t n = 0; n <= 12; ++n) {
    CAPTURE(n);
    auto cl = buildClifford(n);
    CHECK(cl.spinorDim() == (size_t{1} << (n / 2)));
    CHECK(satisfiesCliffordRelations(cl));
    if (n <= 6) CHECK(isIrreducible(cl));
  }
  try {
    buildClifford(13);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("highest-weight modules have the right character") {
  for (const char* label : {"A1", "A2", "B2", "C2", "A3"}) {
    auto rs = RootSystem::parse(label);
    for (long a = 0; a <= 2; ++a)
      for (long b = 0; b <= (rs->rank() > 1 ? 2 : 0); ++b) {
        Weight lambda(rs->rank(), 0);
        lambda[0] = a;
        if (rs->rank() > 1) lambda[1] = b;
        if (characters::weylDimension(rs, lambda) > 40) continue;
        CAPTURE(label);
        CAPTURE(str(lambda));
        auto mod = buildHighestWeightModule(*rs, lambda, 64);
        characters::FormalCharacter chi(rs, characters::Basis::Weight);
        for (const auto& x : mod.weights) chi.add(x, 1);
        CHECK(chi == characters::irreducibleCharacter(rs, lambda));
        // [e_i, f_j] = delta_ij h_i and f_i = e_i^dagger
        for (size_t i = 0; i < rs->rank(); ++i) {
          CHECK(mod.f[i] == mod.e[i].adjoint());
          for (size_t j = 0; j < rs->rank(); ++j) {
            SMatrix expect(mod.dim(), mod.dim());
            if (i == j)
              for (size_t v = 0; v < mod.dim(); ++v) expect(v, v) = mod.weights[v][i];
            CHECK(commutator(mod.e[i], mod.f[j]) == expect);
          }
        }
      }
  }
}

TEST_CASE("Lie representations") {
  auto a1 = RootSystem::build(lie::Family::A, 1);
  auto fund = buildLieRep(a1, w({1}));
  CHECK(fund.dim == 2);
  CHECK(fund.pi.size() == 3);
  CHECK(isLieRepresentation(fund));

  auto triv = buildLieRep(a1, w({0}));
  CHECK(triv.dim == 1);
  for (const auto& m : triv.pi) CHECK(m.isZero());

  auto a2 = RootSystem::build(lie::Family::A, 2);
  auto def = buildLieRep(a2, w({1, 0}));
  CHECK(def.dim == 3);
  CHECK(def.pi.size() == 8);
  CHECK(isLieRepresentation(def));

  for (const char* label : {"A1", "A2", "B2", "C2", "A1xT1", "A1xA1", "T2"}) {
    auto rs = RootSystem::parse(label);
    auto model = LieAlgebraModel::of(rs);
    CHECK(model->dim == 2 * rs->positiveRoots().size() + rs->rank());
    for (long a = 0; a <= 2; ++a) {
      Weight lambda(rs->rank(), 0);
      lambda[0] = a;
      lambda.back() += 1;
      if (!rs->isDominant(lambda) || characters::weylDimension(rs, lambda) > 20) continue;
      CAPTURE(label);
      CAPTURE(str(lambda));
      auto rep = buildLieRep(rs, lambda);
      CHECK(isLieRepresentation(rep));
      auto measured = model->weightsOf(rep.pi);
      CHECK(measured == rep.weights);
      characters::FormalCharacter chi(rs, characters::Basis::Weight);
      for (const auto& x : measured) chi.add(x, 1);
      CHECK(chi == characters::irreducibleCharacter(rs, lambda));
    }
  }
  try {
    buildLieRep(a2, w({4, 4}));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
  try {
    buildLieRep(a2, w({-1, 0}));
    FAIL("expected NotDominant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDominant);
  }
}

TEST_CASE("spin representation") {
  for (const char* label : {"A1", "A1xT1", "A2", "B2"}) {
    CAPTURE(label);
    auto model = LieAlgebraModel::of(RootSystem::parse(label));
    const auto& f = model->f;
    auto cl = buildClifford(f.dim);
    auto ad = spinRepresentation(f, cl);
    auto literal = spinRepresentation(f, cl, SpinConvention::Literal);
    for (size_t a = 0; a < f.dim; ++a) {
      CHECK(literal[a] == -ad[a]);
      CHECK(ad[a].adjoint() == -ad[a]);
      if (cl.grading) CHECK(commutator(ad[a], *cl.grading).isZero());
      for (size_t b = 0; b < f.dim; ++b) {
        // equivariance [ad(X), c(Y)] = c([X,Y]); bracket consistency
        CHECK(commutator(ad[a], cl.gamma[b]) == cliffordBracket(f, cl, a, b));
        SMatrix rhs(cl.spinorDim(), cl.spinorDim());
        for (size_t c = 0; c < f.dim; ++c)
          if (!f(a, b, c).isZero()) rhs += f(a, b, c) * ad[c];
        CHECK(commutator(ad[a], ad[b]) == rhs);
      }
    }
  }
  // su(2) + u(1): the u(1) direction acts as zero
  auto model = LieAlgebraModel::of(RootSystem::parse("A1xT1"));
  auto ad = spinRepresentation(model->f, buildClifford(model->dim));
  CHECK(ad[model->cartan.back()].isZero());
  CHECK(ad[0].rows() == 4);

  StructureConstants abelian(3);
  for (const auto& m : spinRepresentation(abelian, buildClifford(3))) CHECK(m.isZero());

  StructureConstants broken(3);
  broken(0, 1, 2) = 1;  // no matching antisymmetric partner
  try {
    spinRepresentation(broken, buildClifford(3));
    FAIL("expected BadStructureConstants");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadStructureConstants);
  }
  StructureConstants notJacobi(3);
  for (auto [a, b, c] : {std::tuple{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) {
    notJacobi(a, b, c) = 1;
    notJacobi(b, a, c) = -1;
  }
  notJacobi(0, 1, 2) = 2;
  notJacobi(1, 0, 2) = -2;
  CHECK_THROWS_AS(validateStructureConstants(notJacobi), Error);
}

TEST_CASE("spinors split along g = h + p") {
  auto check = [](const char* label, std::vector<size_t> h, std::vector<size_t> p, size_t spDim) {
    CAPTURE(label);
    auto model = LieAlgebraModel::of(RootSystem::parse(label));
    auto split = splitClifford(model->f, h, p);
    CHECK(split.sp.spinorDim() == spDim);
    CHECK(satisfiesCliffordRelations(split.sp));
    REQUIRE(split.changeOfBasis.has_value());
    auto full = buildClifford(model->dim);
    const SMatrix& u = *split.changeOfBasis;
    for (size_t k = 0; k < model->dim; ++k) CHECK(u * full.gamma[k] == split.tensorGamma[k] * u);
  };
  // su(2) with the torus: p = root pair
  check("A1", {2}, {0, 1}, 2);
  // trivial pair
  check("A1", {0, 1, 2}, {}, 1);
  // su(3) with u(2): h = root pair of alpha_1 and the Cartan, p = the other two root pairs
  check("A2", {0, 1, 6, 7}, {2, 3, 4, 5}, 4);

  auto model = LieAlgebraModel::of(RootSystem::parse("A2"));
  try {
    splitClifford(model->f, {0, 1, 2, 6, 7}, {3, 4, 5});
    FAIL("expected NotOrthogonal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotOrthogonal);
  }
}
