#include "diracforge/dirac/dirac.hpp"

#include "diracforge/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace diracforge::dirac {

using clifford::CliffordModule;

namespace {

Rational rationalOf(const Scalar& s, const char* what) {
  require(s.isRational(), ErrorKind::InvariantViolated, std::string(what) + " is not rational: " + str(s));
  return s.toRational();
}

SMatrix sumOfSquaresNegated(const std::vector<SMatrix>& ops, size_t n) {
  SMatrix out(n, n);
  for (const auto& m : ops) out -= m * m;
  return out;
}

}  // namespace

DiracOperator cubicDirac(const LieRep& rep, const CliffordModule& cl, const Rational& q) {
  const auto& model = *rep.algebra;
  require(cl.n == model.dim, ErrorKind::DimensionMismatch,
          "Clifford module has dimension " + std::to_string(cl.n) + " but g has dimension " + std::to_string(model.dim));
  auto ad = clifford::spinRepresentation(model.f, cl);
  size_t v = rep.dim, s = cl.spinorDim();
  DiracOperator d;
  d.matrix = SMatrix(v * s, v * s);
  SMatrix cubic(s, s);
  for (size_t i = 0; i < model.dim; ++i) {
    d.matrix += kron(rep.pi[i], cl.gamma[i]);
    cubic += ad[i] * cl.gamma[i];
  }
  if (sgn(q) != 0) d.matrix += kron(SMatrix::identity(v), Scalar(q) * cubic);
  if (cl.grading) d.grading = kron(SMatrix::identity(v), *cl.grading);
  d.lambda = rep.highest;
  d.q = q;
  d.label = model.system->label();
  return d;
}

bool isSelfAdjoint(const DiracOperator& d) { return d.matrix.adjoint() == d.matrix; }

bool isOdd(const DiracOperator& d) {
  if (!d.grading) return true;
  return (d.matrix * *d.grading + *d.grading * d.matrix).isZero();
}

KostantReport verifyKostantIdentity(const LieRep& rep) {
  const auto& model = *rep.algebra;
  const auto& rs = *model.system;
  auto cl = clifford::buildClifford(model.dim);
  auto d = cubicDirac(rep, cl, Rational(1, 3));
  SMatrix d2 = d.matrix * d.matrix;

  KostantReport r;
  r.label = rs.label();
  r.lambda = rep.highest;
  r.expected = rs.norm2(add(rep.highest, rs.rho()));
  r.rhoNorm2 = rs.norm2(rs.rho());
  auto value = d2.scalarValue();
  if (!value)
    fail(ErrorKind::NotScalar, "D^2 is not scalar on V_" + str(rep.highest) + " (x) S_g for " + rs.label());
  r.isScalar = true;
  r.scalar = rationalOf(*value, "D^2 scalar");
  r.matchesNorm = r.scalar == r.expected;

  // Cas = -sum X_i^2, positive on unitary modules
  const auto& f = model.f;
  Scalar adjTrace = 0;
  for (const auto& x : f.values)
    if (!x.isZero()) adjTrace += x * x;
  r.adjointTrace = rationalOf(adjTrace, "adjoint Casimir trace");

  size_t v = rep.dim, s = cl.spinorDim();
  auto ad = clifford::spinRepresentation(f, cl);
  SMatrix casV = kron(sumOfSquaresNegated(rep.pi, v), SMatrix::identity(s));
  SMatrix casDiag = casV + kron(SMatrix::identity(v), sumOfSquaresNegated(ad, s));
  for (size_t i = 0; i < model.dim; ++i) casDiag -= Scalar(2) * kron(rep.pi[i], ad[i]);
  Scalar tr = 0;
  for (size_t k = 0; k < v * s; ++k) tr += casDiag(k, k);
  r.moduleTrace = rationalOf(tr, "module Casimir trace");

  struct Reading {
    const char* name;
    const SMatrix* cas;
    int coefficient;
  };
  for (auto rd : {Reading{"2 Cas_g, diagonal action on V (x) S", &casDiag, 2},
                  Reading{"Cas_g, diagonal action on V (x) S", &casDiag, 1},
                  Reading{"2 Cas_g acting on V only", &casV, 2}, Reading{"Cas_g acting on V only", &casV, 1}}) {
    CasimirReading cr;
    cr.name = rd.name;
    SMatrix rem = d2 - Scalar(rd.coefficient) * *rd.cas;
    cr.remainder = rem.scalarValue();
    cr.constant = cr.remainder.has_value();
    r.readings.push_back(cr);
  }
  return r;
}

PairModel makePairModel(const lie::EqualRankPair& pair) {
  PairModel pm;
  pm.pair = pair;
  pm.algebra = LieAlgebraModel::of(pair.g);
  const auto& model = *pm.algebra;
  std::vector<bool> inP(model.dim, false);
  for (size_t k : pair.pRootsInG) {
    inP[model.rootPairs[k].x] = true;
    inP[model.rootPairs[k].y] = true;
  }
  for (size_t a = 0; a < model.dim; ++a) (inP[a] ? pm.pIndices : pm.hIndices).push_back(a);
  for (size_t a : pm.hIndices)
    for (size_t b : pm.pIndices)
      for (size_t c : pm.hIndices)
        require(model.f(a, b, c).isZero(), ErrorKind::NotOrthogonal, "[h, p] is not contained in p");

  pm.sp = clifford::buildClifford(pm.pIndices.size());
  pm.adP = clifford::spinRepresentationOn(model.f, pm.pIndices, pm.sp);
  pm.spinorWeights = model.weightsOf(pm.adP);
  pm.grading = *pm.sp.grading;
  Weight shift = sub(pair.g->rho(), pair.mapToG(pair.h->rho()));
  auto it = std::find(pm.spinorWeights.begin(), pm.spinorWeights.end(), shift);
  require(it != pm.spinorWeights.end(), ErrorKind::InvariantViolated, "rho_G - rho_H is not a weight of S_p");
  size_t idx = static_cast<size_t>(it - pm.spinorWeights.begin());
  if (pm.grading(idx, idx) == Scalar(-1)) pm.grading = -pm.grading;
  return pm;
}

RelativeOperator relativeCubicDirac(const PairModel& pm, const Weight& lambdaG, bool checkSymmetries) {
  RelativeOperator out;
  out.rep = buildLieRep(pm.pair.g, lambdaG);
  const auto& rep = out.rep;
  size_t v = rep.dim, s = pm.sp.spinorDim();
  auto& d = out.op;
  d.matrix = SMatrix(v * s, v * s);
  SMatrix cubic(s, s);
  for (size_t k = 0; k < pm.pIndices.size(); ++k) {
    size_t a = pm.pIndices[k];
    d.matrix += kron(rep.pi[a], pm.sp.gamma[k]);
    cubic += pm.adP[a] * pm.sp.gamma[k];
  }
  d.matrix += kron(SMatrix::identity(v), Scalar(Rational(1, 3)) * cubic);
  d.grading = kron(SMatrix::identity(v), pm.grading);
  d.lambda = lambdaG;
  d.q = Rational(1, 3);
  d.label = pm.pair.label;
  d.relative = true;

  out.hAction.assign(pm.algebra->dim, SMatrix());
  for (size_t a : pm.hIndices)
    out.hAction[a] = kron(rep.pi[a], SMatrix::identity(s)) + kron(SMatrix::identity(v), pm.adP[a]);
  for (size_t x = 0; x < v; ++x)
    for (size_t y = 0; y < s; ++y) {
      out.hWeights.push_back(pm.pair.mapToH(add(rep.weights[x], pm.spinorWeights[y])));
      out.parity.push_back(pm.grading(y, y) == Scalar(1) ? 1 : -1);
    }

  if (checkSymmetries) {
    require(isSelfAdjoint(d), ErrorKind::InvariantViolated, "relative Dirac operator is not self-adjoint");
    require(isOdd(d), ErrorKind::InvariantViolated, "relative Dirac operator is not odd");
    for (size_t a : pm.hIndices)
      require(commutator(d.matrix, out.hAction[a]).isZero(), ErrorKind::InvariantViolated,
              "relative Dirac operator does not commute with H");
  }
  return out;
}

namespace {

// Raising operators of H (E_beta up to a positive factor is X - iY) with the
// H weight they add.
std::vector<std::pair<SMatrix, Weight>> raisingOperators(const PairModel& pm, const RelativeOperator& rel) {
  std::vector<std::pair<SMatrix, Weight>> out;
  for (size_t r : pm.pair.hRootInG) {
    const auto& rp = pm.algebra->rootPairs[r];
    out.emplace_back(rel.hAction[rp.x] - Scalar::i() * rel.hAction[rp.y],
                     pm.pair.mapToH(pm.pair.g->positiveRoots()[r]));
  }
  return out;
}

std::vector<size_t> indicesOf(const std::vector<Weight>& ws, const Weight& w) {
  std::vector<size_t> out;
  for (size_t k = 0; k < ws.size(); ++k)
    if (ws[k] == w) out.push_back(k);
  return out;
}

// Vectors supported on `cols` killed by every operator in `ops` (rows restricted
// to where the image can land).
std::vector<std::vector<Scalar>> commonKernel(const std::vector<std::pair<const SMatrix*, std::vector<size_t>>>& ops,
                                              const std::vector<size_t>& cols) {
  std::vector<SMatrix> blocks;
  for (const auto& [m, rows] : ops)
    if (!rows.empty()) blocks.push_back(m->submatrix(rows, cols));
  if (blocks.empty()) {
    std::vector<std::vector<Scalar>> basis;
    for (size_t k = 0; k < cols.size(); ++k) {
      std::vector<Scalar> e(cols.size(), Scalar(0));
      e[k] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  return nullspace(SMatrix::stack(blocks));
}

}  // namespace

SpectralReport spectralCheckRelative(const PairModel& pm, const Weight& lambdaG) {
  auto rel = relativeCubicDirac(pm, lambdaG, true);
  const auto& g = *pm.pair.g;
  const auto& h = *pm.pair.h;
  SpectralReport report;
  report.pair = pm.pair.label;
  report.lambda = lambdaG;
  Rational top = g.norm2(add(lambdaG, g.rho()));
  auto raising = raisingOperators(pm, rel);

  std::vector<Weight> distinct = rel.hWeights;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  size_t n = rel.hWeights.size();
  for (const auto& mu : distinct) {
    auto cols = indicesOf(rel.hWeights, mu);
    std::vector<std::pair<const SMatrix*, std::vector<size_t>>> ops;
    for (const auto& [e, beta] : raising) ops.emplace_back(&e, indicesOf(rel.hWeights, add(mu, beta)));
    auto highest = commonKernel(ops, cols);
    if (highest.empty()) continue;
    SpectralBlock block;
    block.mu = mu;
    block.multiplicity = static_cast<long>(highest.size());
    block.expected = top - h.norm2(add(mu, h.rho()));
    std::optional<Scalar> scalar;
    bool scalarOk = true;
    for (const auto& local : highest) {
      std::vector<Scalar> vec(n, Scalar(0));
      for (size_t k = 0; k < cols.size(); ++k) vec[cols[k]] = local[k];
      auto dd = rel.op.matrix.apply(rel.op.matrix.apply(vec));
      // dd must be c * vec
      size_t pivot = 0;
      while (vec[cols[pivot]].isZero()) ++pivot;
      Scalar c = dd[cols[pivot]] / vec[cols[pivot]];
      for (size_t k = 0; k < n; ++k)
        if (!(dd[k] == c * vec[k])) scalarOk = false;
      if (scalar && !(*scalar == c)) scalarOk = false;
      scalar = c;
    }
    if (!scalarOk || !scalar->isRational())
      fail(ErrorKind::SpectralMismatch, "D^2 is not scalar on the H-isotypic block of weight " + str(mu));
    block.scalar = scalar->toRational();
    block.match = block.scalar == block.expected;
    if (!block.match)
      fail(ErrorKind::SpectralMismatch, "D^2 = " + str(block.scalar) + " on block " + str(mu) + ", expected " +
                                            str(block.expected));
    if (sgn(block.expected) == 0) report.kernel.push_back(mu);
    report.blocks.push_back(block);
  }
  return report;
}

std::vector<Weight> dominantBall(const lie::RootSystem& rs, const Rational& bound) {
  require(rs.rank() == rs.semisimpleRank(), ErrorKind::Unsupported, "dominant ball needs a semisimple system");
  std::vector<Weight> out;
  Weight cur(rs.rank(), 0);
  std::function<void(size_t)> walk = [&](size_t j) {
    if (j == rs.rank()) {
      if (rs.norm2(add(cur, rs.rho())) <= bound) out.push_back(cur);
      return;
    }
    for (long c = 0;; ++c) {
      cur[j] = c;
      // coordinates beyond j at zero give the smallest norm
      Weight probe = cur;
      for (size_t k = j + 1; k < probe.size(); ++k) probe[k] = 0;
      if (rs.norm2(add(probe, rs.rho())) > bound) break;
      walk(j + 1);
    }
    cur[j] = 0;
  };
  walk(0);
  return out;
}

characters::FormalCharacter kernelIndex(const PairModel& pm, const characters::FormalCharacter& w) {
  const auto& g = pm.pair.g;
  const auto& h = pm.pair.h;
  require(w.basis == characters::Basis::Irreducible, ErrorKind::Unsupported, "kernelIndex expects an H decomposition");
  require(w.system->label() == h->label(), ErrorKind::SystemMismatch,
          "character lives on " + w.system->label() + ", pair subgroup is " + h->label());
  characters::FormalCharacter out(g, characters::Basis::Irreducible);
  for (const auto& [nu, coefficient] : w.entries) {
    Rational bound = h->norm2(add(nu, h->rho()));
    for (const auto& lambda : dominantBall(*g, bound)) {
      auto rel = relativeCubicDirac(pm, lambda, false);
      auto raising = raisingOperators(pm, rel);
      auto sameWeight = indicesOf(rel.hWeights, nu);
      if (sameWeight.empty()) continue;
      long graded = 0;
      for (int parity : {1, -1}) {
        std::vector<size_t> cols;
        for (size_t k : sameWeight)
          if (rel.parity[k] == parity) cols.push_back(k);
        if (cols.empty()) continue;
        std::vector<std::pair<const SMatrix*, std::vector<size_t>>> ops;
        ops.emplace_back(&rel.op.matrix, sameWeight);
        for (const auto& [e, beta] : raising) ops.emplace_back(&e, indicesOf(rel.hWeights, add(nu, beta)));
        graded += parity * static_cast<long>(commonKernel(ops, cols).size());
      }
      out.add(lambda, coefficient * graded);
    }
  }
  return out;
}

}  // namespace diracforge::dirac
