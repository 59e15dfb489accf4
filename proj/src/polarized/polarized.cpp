#include "diracforge/polarized/polarized.hpp"

#include "diracforge/errors.hpp"

#include <map>

namespace diracforge::polarized {

using characters::Basis;

lie::RootSystemPtr torusOfRank(size_t rank) {
  if (rank > 0) return lie::RootSystem::parse("T" + std::to_string(rank));
  static const lie::RootSystemPtr point = std::make_shared<lie::RootSystem>(
      "T0", std::vector<lie::Factor>{}, std::vector<Weight>{}, std::vector<size_t>{}, RMatrix(0, 0), RMatrix(0, 0));
  return point;
}

namespace {

size_t resolveRank(const std::vector<Weight>& ws, const Weight& alpha, std::optional<size_t> rank) {
  size_t r = rank.value_or(alpha.size());
  require(alpha.size() == r, ErrorKind::SystemMismatch, "alpha has " + std::to_string(alpha.size()) + " coordinates");
  for (const auto& w : ws)
    require(w.size() == r, ErrorKind::SystemMismatch, "fiber weight " + str(w) + " has the wrong rank");
  return r;
}

// Support of one factor: pairs (step weight, sign, first k). Terms are
// sign * e^{k step} for k >= first, and <step, alpha> > 0.
struct Ray {
  Weight step;
  long sign;
  long first;
  Rational pairing;
};

Ray rayOf(const Weight& w, const Weight& alpha) {
  Rational p = dot(w, alpha);
  require(sgn(p) != 0, ErrorKind::NonGenericPolarization,
          "fiber weight " + str(w) + " is orthogonal to alpha = " + str(alpha));
  if (sgn(p) < 0) return {scale(Rational(-1), w), 1, 0, -p};
  return {w, -1, 1, p};
}

}  // namespace

ConeSeries polarizedExpand(const std::vector<Weight>& fiberWeights, const Weight& alpha, const Rational& window,
                           std::optional<size_t> rank) {
  size_t r = resolveRank(fiberWeights, alpha, rank);
  std::vector<Ray> rays;
  for (const auto& w : fiberWeights) rays.push_back(rayOf(w, alpha));

  ConeSeries out;
  out.system = torusOfRank(r);
  out.basis = Basis::Weight;
  out.polarizer = alpha;
  out.offset = Rational(0);
  out.window = window;
  // every factor contributes a nonnegative pairing, so partial sums prune
  std::map<Weight, long> partial{{Weight(r, 0), 1}};
  for (const auto& ray : rays) {
    std::map<Weight, long> next;
    for (const auto& [w, c] : partial) {
      Weight cur = w;
      for (long k = 0; k < ray.first; ++k) cur = add(cur, ray.step);
      Rational p = dot(cur, alpha);
      for (; p <= window; cur = add(cur, ray.step), p += ray.pairing) {
        long& slot = next[cur];
        slot += c * ray.sign;
        if (slot == 0) next.erase(cur);
      }
    }
    partial = std::move(next);
  }
  for (const auto& [w, c] : partial) out.add(w, c);
  out.validate();
  require(multiplyBackIsOne(out, fiberWeights), ErrorKind::InvariantViolated,
          "polarized expansion does not invert the fiber product");
  return out;
}

bool multiplyBackIsOne(const ConeSeries& series, const std::vector<Weight>& fiberWeights) {
  const Weight& alpha = series.polarizer;
  // product of (1 - e^{-w_i}) as a finite character
  std::map<Weight, long> poly{{Weight(alpha.size(), 0), 1}};
  Rational reach = 0;  // largest pairing increase needed to look up a term
  for (const auto& w : fiberWeights) {
    std::map<Weight, long> next;
    Weight neg = scale(Rational(-1), w);
    for (const auto& [u, c] : poly) {
      next[u] += c;
      next[add(u, neg)] -= c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    poly = std::move(next);
    Rational p = dot(w, alpha);
    if (sgn(p) > 0) reach += p;
  }
  std::map<Weight, long> prod;
  for (const auto& [u, c] : poly)
    for (const auto& [v, m] : series.entries) prod[add(u, v)] += c * m;
  // coefficient at lambda uses series terms at lambda + w_S; all are known
  // when <lambda, alpha> + reach <= window (and above the floor, if any)
  Rational lowReach = 0;
  for (const auto& w : fiberWeights) {
    Rational p = dot(w, alpha);
    if (sgn(p) < 0) lowReach += p;
  }
  auto certified = [&](const Weight& lambda) {
    Rational p = series.pairing(lambda);
    if (p + reach > series.window) return false;
    if (series.floor && p + lowReach < *series.floor) return false;
    return true;
  };
  Weight origin(alpha.size(), 0);
  for (const auto& [lambda, c] : prod)
    if (certified(lambda) && c != (lambda == origin ? 1 : 0)) return false;
  // the origin must be certified and present when the window allows it
  if (certified(origin)) {
    auto it = prod.find(origin);
    if (it == prod.end() || it->second != 1) return false;
  }
  return true;
}

ConeSeries vectorSpaceIndex(const std::vector<Weight>& fiberWeights, const Weight& alpha, const Weight& shift,
                            const Rational& window, std::optional<size_t> rank) {
  ConeSeries base = polarizedExpand(fiberWeights, alpha, window, rank);
  require(shift.size() == alpha.size(), ErrorKind::SystemMismatch, "shift has the wrong rank");
  for (const auto& s : shift)
    require(isInteger(s), ErrorKind::NotIntegral, "shift " + str(shift) + " is not a lattice weight");
  Rational p = dot(shift, alpha);
  ConeSeries out = base;
  out.entries.clear();
  for (const auto& [w, c] : base.entries) out.add(add(w, shift), c);
  out.offset = -p;
  out.window = window + p;
  return out;
}

ConeSeries bundleIndex(const FormalCharacter& base, const std::vector<Weight>& fiberWeights, const Weight& alpha,
                       const Weight& shift, const Rational& window, bool requirePolarized) {
  require(base.basis == Basis::Weight, ErrorKind::Unsupported, "base character must be in the weight basis");
  require(!base.empty(), ErrorKind::ConfigurationError, "base character is zero");
  base.system->check(alpha);
  require(base.system->semisimpleRank() == 0, ErrorKind::SystemMismatch, "base character must live on a torus");
  Weight origin(alpha.size(), 0);
  std::optional<Rational> lowest;
  for (const auto& [b, c] : base.entries) {
    if (requirePolarized)
      require(b == origin, ErrorKind::NonTrivialBaseAction,
              "base weight " + str(b) + " is nonzero; polarization is only guaranteed for a trivial base action");
    Rational p = dot(b, alpha);
    if (!lowest || p < *lowest) lowest = p;
  }
  ConeSeries fiber = vectorSpaceIndex(fiberWeights, alpha, shift, window, alpha.size());
  ConeSeries out;
  out.system = base.system;
  out.basis = Basis::Weight;
  out.polarizer = alpha;
  out.offset = *fiber.offset - *lowest;
  out.window = fiber.window + *lowest;
  for (const auto& [b, c] : base.entries)
    for (const auto& [v, m] : fiber.entries) {
      Weight w = add(b, v);
      if (out.pairing(w) <= out.window) out.add(w, c * m);
    }
  return out;
}

VanishingReport vanishingCheck(const ConeSeries& series, const Weight& alpha, bool strict) {
  auto pol = characters::isPolarized(series, alpha, strict);
  VanishingReport report;
  report.strict = strict;
  report.polarized = pol.polarized;
  report.witness = pol.witness;
  report.trivialCoefficient = series.at(series.system->zero());
  if (!pol.polarized)
    fail(ErrorKind::PolarizationViolated,
         std::string(strict ? "strict " : "") + "polarization fails at weight " + str(*pol.witness));
  if (strict && report.trivialCoefficient != 0)
    fail(ErrorKind::PolarizationViolated, "trivial coefficient " + std::to_string(report.trivialCoefficient) +
                                              " at weight " + str(series.system->zero()));
  return report;
}

}  // namespace diracforge::polarized
