#include "diracforge/induction/induction.hpp"

#include "diracforge/errors.hpp"

namespace diracforge::induction {

using characters::Basis;
using characters::ConeSeries;
using characters::FormalCharacter;

Weight coadjointSpinorShift(const lie::EqualRankPair& pair) {
  return sub(pair.mapToH(pair.g->rho()), pair.h->rho());
}

void requireSpinPair(const lie::EqualRankPair& pair) {
  Weight shift = coadjointSpinorShift(pair);
  require(pair.h->isLatticeWeight(shift), ErrorKind::ConfigurationError,
          "rho_G - rho_H = " + str(shift) + " is not a weight of " + pair.h->label() +
              "; the spinors of p do not carry an H action for " + pair.label);
}

SignedIrrep diracInduct(const lie::EqualRankPair& pair, const Weight& lambdaH) {
  const auto& h = *pair.h;
  const auto& g = *pair.g;
  h.check(lambdaH);
  require(h.isAlgebraicallyIntegral(lambdaH) && h.isLatticeWeight(lambdaH), ErrorKind::NotIntegral,
          str(lambdaH) + " is not an integral weight of " + h.label());
  require(h.isDominant(lambdaH), ErrorKind::NotDominant, str(lambdaH) + " is not dominant for " + h.label());
  requireSpinPair(pair);
  Weight xi = pair.mapToG(add(lambdaH, h.rho()));
  if (!g.isRegular(xi)) return {};
  auto [dom, word] = g.makeDominant(xi);
  Weight mu = sub(dom, g.rho());
  require(g.isDominant(mu) && g.isAlgebraicallyIntegral(mu) && g.isLatticeWeight(mu), ErrorKind::InvariantViolated,
          "induced highest weight " + str(mu) + " is not dominant integral");
  return {word.sign(), mu};
}

FormalCharacter inductCharacter(const lie::EqualRankPair& pair, const FormalCharacter& chi) {
  require(chi.system->label() == pair.h->label(), ErrorKind::SystemMismatch,
          "character lives on " + chi.system->label() + ", expected " + pair.h->label());
  FormalCharacter dec = characters::decompose(chi);
  FormalCharacter out(pair.g, Basis::Irreducible);
  for (const auto& [lambda, c] : dec.entries) {
    auto r = diracInduct(pair, lambda);
    if (r.sign != 0) out.add(r.mu, c * r.sign);
  }
  return out;
}

ConeSeries inductSeries(const lie::EqualRankPair& pair, const ConeSeries& sigma) {
  require(sigma.system->label() == pair.h->label(), ErrorKind::SystemMismatch,
          "series lives on " + sigma.system->label() + ", expected " + pair.h->label());
  require(sigma.basis == Basis::Irreducible || pair.h->positiveRoots().empty(), ErrorKind::Unsupported,
          "windowed induction needs the H irreducible basis");
  require(!sigma.floor, ErrorKind::Unsupported, "windowed induction needs a series complete below its window");
  sigma.validate();
  const auto& g = *pair.g;
  Weight alphaG = pair.mapToG(sigma.polarizer);
  Weight alphaPlus = g.makeDominant(alphaG).first;
  Rational bound = sigma.window + pair.h->inner(pair.h->rho(), sigma.polarizer) - g.inner(g.rho(), alphaPlus);
  require(sgn(bound) >= 0, ErrorKind::WindowUnderflow,
          "input window " + str(sigma.window) + " certifies no induced term (shifted bound " + str(bound) + ")");

  ConeSeries out;
  out.system = pair.g;
  out.basis = Basis::Irreducible;
  out.polarizer = alphaPlus;
  out.window = bound;
  for (const auto& [lambda, c] : sigma.entries) {
    auto r = diracInduct(pair, lambda);
    if (r.sign == 0) continue;
    if (g.inner(r.mu, alphaPlus) <= bound) out.add(r.mu, c * r.sign);
  }
  return out;
}

TransferReport multiplicityTransferCheck(const lie::EqualRankPair& pair, const FormalCharacter& chi) {
  require(chi.system->label() == pair.h->label(), ErrorKind::SystemMismatch,
          "character lives on " + chi.system->label() + ", expected " + pair.h->label());
  requireSpinPair(pair);
  FormalCharacter dec = characters::decompose(chi);
  TransferReport report;
  report.shift = coadjointSpinorShift(pair);
  FormalCharacter twisted(pair.h, Basis::Irreducible);
  for (const auto& [nu, c] : dec.entries) {
    require(pair.g->isDominant(pair.mapToG(nu)), ErrorKind::NotDominant,
            "highest weight " + str(nu) + " is not dominant for " + pair.g->label());
    // the shift is orthogonal to the roots of H, so it only moves the label
    twisted.add(add(nu, report.shift), c);
  }
  report.induced = inductCharacter(pair, twisted);
  report.inducedTrivial = characters::trivialMultiplicity(report.induced);
  report.originalTrivial = characters::trivialMultiplicity(dec);
  report.equal = report.inducedTrivial == report.originalTrivial;
  if (!report.equal)
    fail(ErrorKind::TransferMismatch, "trivial multiplicity " + std::to_string(report.inducedTrivial) +
                                          " after induction, " + std::to_string(report.originalTrivial) + " before");
  return report;
}

}  // namespace diracforge::induction
