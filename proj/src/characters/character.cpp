#include "diracforge/characters/character.hpp"

#include "diracforge/characters/cache.hpp"
#include "diracforge/errors.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>

namespace diracforge::characters {

std::string_view basisName(Basis b) { return b == Basis::Weight ? "weight-basis" : "irreducible-basis"; }

void FormalCharacter::add(const Weight& w, long m) {
  if (m == 0) return;
  auto it = entries.find(w);
  if (it == entries.end()) {
    entries.emplace(w, m);
  } else if ((it->second += m) == 0) {
    entries.erase(it);
  }
}

long FormalCharacter::at(const Weight& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

long FormalCharacter::dimension() const {
  long d = 0;
  for (const auto& [w, m] : entries) d += m;
  return d;
}

bool FormalCharacter::isWeylInvariant() const {
  for (const auto& [w, m] : entries)
    for (size_t i = 0; i < system->semisimpleRank(); ++i)
      if (at(system->reflect(i, w)) != m) return false;
  return true;
}

bool ConeSeries::inWindow(const Weight& w) const {
  Rational p = pairing(w);
  return p <= window && (!floor || p >= *floor);
}

void ConeSeries::add(const Weight& w, long m) {
  if (m == 0) return;
  auto it = entries.find(w);
  if (it == entries.end()) {
    entries.emplace(w, m);
  } else if ((it->second += m) == 0) {
    entries.erase(it);
  }
}

long ConeSeries::at(const Weight& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

void ConeSeries::validate() const {
  require(system != nullptr, ErrorKind::InvariantViolated, "cone series without a root system");
  system->check(polarizer);
  for (const auto& [w, m] : entries) {
    system->check(w);
    require(m != 0, ErrorKind::InvariantViolated, "stored zero coefficient at " + str(w));
    require(inWindow(w), ErrorKind::InvariantViolated, "weight " + str(w) + " lies outside the window");
    if (offset)
      require(pairing(w) >= -*offset, ErrorKind::InvariantViolated,
              "weight " + str(w) + " violates the declared support bound");
  }
}

namespace {

void requireDominantIntegral(const lie::RootSystem& rs, const Weight& lambda) {
  rs.check(lambda);
  require(rs.isAlgebraicallyIntegral(lambda), ErrorKind::NotIntegral,
          str(lambda) + " is not integral for " + rs.label());
  require(rs.isDominant(lambda), ErrorKind::NotDominant, str(lambda) + " is not dominant for " + rs.label());
}

// Characters are immutable, so a process-wide memo is safe; the label
// identifies the coordinate system.
struct Memo {
  std::shared_mutex mutex;
  std::unordered_map<std::string, FormalCharacter> table;
};

Memo& memo() {
  static Memo m;
  return m;
}

FormalCharacter freudenthal(const RootSystemPtr& rs, const Weight& lambda) {
  const auto& pos = rs->positiveRoots();
  const Weight& rho = rs->rho();

  // Dominant weights below lambda, reached by subtracting positive roots.
  std::set<Weight> dominant{lambda};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier)
      for (const auto& a : pos) {
        Weight nu = sub(mu, a);
        if (rs->isDominant(nu) && dominant.insert(nu).second) next.push_back(nu);
      }
    frontier = std::move(next);
  }
  // (lambda - mu, rho) grows strictly along positive roots, so sorting by it
  // processes every dominant weight after all weights above it.
  std::vector<Weight> order(dominant.begin(), dominant.end());
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    Rational da = rs->inner(sub(lambda, a), rho), db = rs->inner(sub(lambda, b), rho);
    return da < db || (da == db && a < b);
  });

  std::map<Weight, long> mult;
  Rational top = rs->norm2(add(lambda, rho));
  auto lookup = [&](const Weight& w) -> long {
    auto dom = rs->makeDominant(w).first;
    auto it = mult.find(dom);
    return it == mult.end() ? 0 : it->second;
  };
  for (const auto& mu : order) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rational sum = 0;
    for (const auto& a : pos) {
      Weight shifted = mu;
      for (;;) {
        shifted = add(shifted, a);
        long m = lookup(shifted);
        if (m == 0) break;  // weight strings are unbroken
        sum += 2 * m * rs->inner(shifted, a);
      }
    }
    Rational denom = top - rs->norm2(add(mu, rho));
    require(sgn(denom) > 0, ErrorKind::InvariantViolated, "Freudenthal denominator vanished");
    Rational m = sum / denom;
    m.canonicalize();
    require(isInteger(m), ErrorKind::InvariantViolated, "non-integral Freudenthal multiplicity");
    if (sgn(m) != 0) mult[mu] = toLong(m);
  }

  FormalCharacter out(rs, Basis::Weight);
  for (const auto& [mu, m] : mult)
    for (const auto& w : rs->weylOrbit(mu)) out.add(w, m);
  return out;
}

}  // namespace

FormalCharacter irreducibleCharacter(const RootSystemPtr& rs, const Weight& lambda, CharacterCache* cache) {
  requireDominantIntegral(*rs, lambda);
  std::string key = rs->label() + "|" + str(lambda);
  {
    std::shared_lock lock(memo().mutex);
    auto it = memo().table.find(key);
    if (it != memo().table.end()) {
      FormalCharacter hit = it->second;
      hit.system = rs;
      return hit;
    }
  }
  std::optional<FormalCharacter> found;
  if (cache) found = cache->load(rs, lambda);
  FormalCharacter chi = found ? *found : freudenthal(rs, lambda);
  if (cache && !found) cache->store(lambda, chi);
  std::unique_lock lock(memo().mutex);
  memo().table.emplace(key, chi);
  return chi;
}

Integer weylDimension(const RootSystemPtr& rs, const Weight& lambda) {
  requireDominantIntegral(*rs, lambda);
  Rational d = 1;
  Weight shifted = add(lambda, rs->rho());
  for (const auto& a : rs->positiveRoots()) d *= rs->inner(shifted, a) / rs->inner(rs->rho(), a);
  d.canonicalize();
  require(isInteger(d), ErrorKind::InvariantViolated, "Weyl dimension is not an integer");
  return d.get_num();
}

FormalCharacter toWeightBasis(const FormalCharacter& chi, CharacterCache* cache) {
  if (chi.basis == Basis::Weight) return chi;
  FormalCharacter out(chi.system, Basis::Weight);
  for (const auto& [lambda, c] : chi.entries)
    for (const auto& [w, m] : irreducibleCharacter(chi.system, lambda, cache).entries) out.add(w, c * m);
  return out;
}

FormalCharacter decompose(const FormalCharacter& chi, CharacterCache* cache) {
  if (chi.basis == Basis::Irreducible) return chi;
  const auto& rs = chi.system;
  FormalCharacter rest = chi;
  FormalCharacter out(rs, Basis::Irreducible);
  while (!rest.empty()) {
    // A highest weight of what remains: maximal (mu, rho), dominant.
    Rational top = rs->inner(rest.entries.begin()->first, rs->rho());
    for (const auto& [w, m] : rest.entries) top = std::max(top, rs->inner(w, rs->rho()));
    std::optional<Weight> best;
    for (const auto& [w, m] : rest.entries)
      if (rs->inner(w, rs->rho()) == top && rs->isDominant(w)) {
        best = w;
        break;
      }
    require(best.has_value(), ErrorKind::InvariantViolated,
            "character is not Weyl invariant, cannot peel a highest weight");
    require(rs->isAlgebraicallyIntegral(*best), ErrorKind::NotIntegral,
            "highest weight " + str(*best) + " is not integral");
    long c = rest.at(*best);
    out.add(*best, c);
    for (const auto& [w, m] : irreducibleCharacter(rs, *best, cache).entries) rest.add(w, -c * m);
  }
  return out;
}

FormalCharacter multiply(const FormalCharacter& a, const FormalCharacter& b) {
  require(a.basis == Basis::Weight && b.basis == Basis::Weight, ErrorKind::Unsupported,
          "multiply expects weight-basis characters");
  require(a.system->label() == b.system->label(), ErrorKind::SystemMismatch, "characters live on different systems");
  FormalCharacter out(a.system, Basis::Weight);
  for (const auto& [wa, ma] : a.entries)
    for (const auto& [wb, mb] : b.entries) out.add(add(wa, wb), ma * mb);
  return out;
}

FormalCharacter tensorDecompose(const RootSystemPtr& rs, const Weight& lambda, const Weight& mu,
                                CharacterCache* cache) {
  return decompose(multiply(irreducibleCharacter(rs, lambda, cache), irreducibleCharacter(rs, mu, cache)), cache);
}

FormalCharacter restrictCharacter(const lie::EqualRankPair& pair, const Weight& lambdaG, CharacterCache* cache) {
  require(pair.g && pair.h && pair.g->rank() == pair.h->rank(), ErrorKind::IncompatiblePair,
          "pair does not share a maximal torus");
  FormalCharacter g = irreducibleCharacter(pair.g, lambdaG, cache);
  FormalCharacter h(pair.h, Basis::Weight);
  for (const auto& [w, m] : g.entries) h.add(pair.mapToH(w), m);
  return decompose(h, cache);
}

long trivialMultiplicity(const FormalCharacter& decomposition) {
  FormalCharacter chi = decomposition.basis == Basis::Irreducible ? decomposition : decompose(decomposition);
  return chi.at(chi.system->zero());
}

Weight dualHighestWeight(const RootSystemPtr& rs, const Weight& lambda) {
  requireDominantIntegral(*rs, lambda);
  return rs->makeDominant(scale(Rational(-1), lambda)).first;
}

PolarizationReport isPolarized(const ConeSeries& sigma, const Weight& alpha, bool strict) {
  sigma.system->check(alpha);
  // alpha = c * polarizer with c > 0, so the window transfers to the alpha pairing
  std::optional<Rational> c;
  for (size_t j = 0; j < alpha.size(); ++j) {
    if (sgn(sigma.polarizer[j]) == 0) {
      require(sgn(alpha[j]) == 0, ErrorKind::ConfigurationError, "alpha is not parallel to the series polarizer");
      continue;
    }
    Rational r = alpha[j] / sigma.polarizer[j];
    require(!c || *c == r, ErrorKind::ConfigurationError, "alpha is not parallel to the series polarizer");
    c = r;
  }
  require(c && sgn(*c) > 0, ErrorKind::ConfigurationError, "alpha must be a positive multiple of the polarizer");
  require(sgn(sigma.window) >= 0, ErrorKind::WindowTooSmall,
          "window " + str(sigma.window) + " is below 0 in the alpha pairing");

  PolarizationReport report;
  std::optional<Rational> worst;
  for (const auto& [w, m] : sigma.entries) {
    Rational p = sigma.system->inner(w, alpha);
    bool bad = strict ? sgn(p) <= 0 : sgn(p) < 0;
    if (bad && (!worst || p < *worst)) {
      worst = p;
      report.polarized = false;
      report.witness = w;
    }
  }
  return report;
}

}  // namespace diracforge::characters
