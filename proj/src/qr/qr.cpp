#include "diracforge/qr/qr.hpp"

#include "diracforge/errors.hpp"
#include "diracforge/induction/induction.hpp"
#include "diracforge/polarized/polarized.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>

namespace diracforge::qr {

using characters::Basis;

bool ToricModel::prequantized() const {
  return std::all_of(halfSpaces.begin(), halfSpaces.end(), [](const HalfSpace& h) { return isInteger(h.offset); });
}

lie::RootSystemPtr ToricModel::torus() const { return polarized::torusOfRank(dimension); }

namespace {

bool isIntegerVector(const Weight& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return isInteger(x); });
}

bool inside(const ToricModel& m, const Weight& x) {
  for (const auto& h : m.halfSpaces)
    if (dot(x, h.normal) < -h.offset) return false;
  return true;
}

// n-subsets of {0..count-1} in lexicographic order
std::vector<std::vector<size_t>> subsets(size_t count, size_t n) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < count; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

ToricModel buildToricModel(size_t dimension, std::vector<HalfSpace> halfSpaces) {
  ToricModel model;
  model.dimension = dimension;
  for (auto& h : halfSpaces) {
    require(h.normal.size() == dimension, ErrorKind::ConfigurationError,
            "normal " + str(h.normal) + " does not have " + std::to_string(dimension) + " coordinates");
    require(isIntegerVector(h.normal) && !isZeroVec(h.normal), ErrorKind::ConfigurationError,
            "normal " + str(h.normal) + " is not a nonzero integer vector");
    Integer g = 0;
    for (const auto& x : h.normal) g = gcd(g, Integer(x.get_num()));
    require(g == 1, ErrorKind::ConfigurationError, "normal " + str(h.normal) + " is not primitive");
  }
  model.halfSpaces = std::move(halfSpaces);
  if (dimension == 0) {
    require(model.halfSpaces.empty(), ErrorKind::ConfigurationError, "a point takes no half-spaces");
    model.vertices.push_back({Weight{}, {}, {}});
    return model;
  }
  const size_t n = dimension;
  for (const auto& active : subsets(model.halfSpaces.size(), n)) {
    RMatrix normals(n, n), rhs(n, 1);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) normals(i, j) = model.halfSpaces[active[i]].normal[j];
      rhs(i, 0) = -model.halfSpaces[active[i]].offset;
    }
    if (rankOf(normals) < n) continue;
    RMatrix sol = solve(normals, rhs);
    Weight x(n);
    for (size_t j = 0; j < n; ++j) x[j] = sol(j, 0);
    if (!inside(model, x)) continue;
    if (std::any_of(model.vertices.begin(), model.vertices.end(), [&](const ToricVertex& v) { return v.point == x; }))
      continue;
    ToricVertex v{x, {}, {}};
    for (size_t k = 0; k < model.halfSpaces.size(); ++k)
      if (dot(x, model.halfSpaces[k].normal) == -model.halfSpaces[k].offset) v.facets.push_back(k);
    require(v.facets.size() == n, ErrorKind::ConfigurationError, "vertex " + str(x) + " is not simple");
    RMatrix inv = inverse(normals);
    for (size_t j = 0; j < n; ++j) {
      Weight e(n);
      for (size_t i = 0; i < n; ++i) e[i] = inv(i, j);
      require(isIntegerVector(e), ErrorKind::ConfigurationError,
              "Delzant condition fails at vertex " + str(x) + ": normals do not form a lattice basis");
      bool bounded = std::any_of(model.halfSpaces.begin(), model.halfSpaces.end(),
                                 [&](const HalfSpace& h) { return sgn(dot(e, h.normal)) < 0; });
      require(bounded, ErrorKind::ConfigurationError, "polytope is unbounded along " + str(e) + " from " + str(x));
      v.edges.push_back(e);
    }
    model.vertices.push_back(std::move(v));
  }
  require(!model.vertices.empty(), ErrorKind::ConfigurationError, "polytope has no vertices");
  return model;
}

ToricModel projectiveLine(long k) {
  require(k >= 1, ErrorKind::ConfigurationError, "CP1 needs k >= 1");
  return buildToricModel(1, {{{Rational(1)}, 0}, {{Rational(-1)}, k}});
}

ToricModel projectivePlane(long k) {
  require(k >= 1, ErrorKind::ConfigurationError, "CP2 needs k >= 1");
  return buildToricModel(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, k}});
}

ToricModel hirzebruch(long r, long a, long b) {
  require(r >= 0 && b >= 1 && a > r * b, ErrorKind::ConfigurationError, "Hirzebruch data needs a > r b, b >= 1");
  return buildToricModel(2, {{{0, 1}, 0}, {{0, -1}, b}, {{1, 0}, 0}, {{-1, Rational(-r)}, a}});
}

ToricModel toricPoint() { return buildToricModel(0, {}); }

ToricModel transformModel(const ToricModel& model, const RMatrix& m) {
  size_t n = model.dimension;
  require(m.rows() == n && m.cols() == n, ErrorKind::DimensionMismatch, "transform has the wrong size");
  RMatrix inv = inverse(m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      require(isInteger(m(i, j)) && isInteger(inv(i, j)), ErrorKind::ConfigurationError, "transform is not in GL(n, Z)");
  // <x, nu> = <m x, m^{-T} nu>
  RMatrix invT = inv.transpose();
  std::vector<HalfSpace> hs;
  for (const auto& h : model.halfSpaces) hs.push_back({invT.apply(h.normal), h.offset});
  return buildToricModel(n, hs);
}

ToricModel parseToricModel(const std::string& text, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, source + ": " + e.what());
  }
  auto field = [&](const std::string& name) { return source + ": field " + name; };
  if (!j.is_object() || !j.contains("halfspaces") || !j["halfspaces"].is_array())
    fail(ErrorKind::ParseError, field("halfspaces") + ": expected an array");
  std::vector<HalfSpace> hs;
  std::optional<size_t> dim;
  if (j.contains("dimension")) {
    if (!j["dimension"].is_number_unsigned()) fail(ErrorKind::ParseError, field("dimension") + ": expected a count");
    dim = j["dimension"].get<size_t>();
  }
  size_t idx = 0;
  for (const auto& h : j["halfspaces"]) {
    std::string where = "halfspaces[" + std::to_string(idx++) + "]";
    if (!h.is_object() || !h.contains("normal") || !h["normal"].is_array())
      fail(ErrorKind::ParseError, field(where + ".normal") + ": expected an integer array");
    HalfSpace s;
    for (const auto& x : h["normal"]) {
      if (!x.is_number_integer()) fail(ErrorKind::ParseError, field(where + ".normal") + ": expected integers");
      s.normal.emplace_back(x.get<long>());
    }
    if (!h.contains("offset")) fail(ErrorKind::ParseError, field(where + ".offset") + ": missing");
    const auto& off = h["offset"];
    try {
      if (off.is_string())
        s.offset = parseRational(off.get<std::string>());
      else if (off.is_number_integer())
        s.offset = off.get<long>();
      else
        fail(ErrorKind::ParseError, "expected \"p/q\" or an integer");
    } catch (const Error& e) {
      fail(ErrorKind::ParseError, field(where + ".offset") + ": " + e.what());
    }
    hs.push_back(std::move(s));
  }
  size_t n = dim.value_or(hs.empty() ? 0 : hs.front().normal.size());
  return buildToricModel(n, std::move(hs));
}

std::string toricModelJson(const ToricModel& model) {
  nlohmann::json j;
  j["dimension"] = model.dimension;
  j["halfspaces"] = nlohmann::json::array();
  for (const auto& h : model.halfSpaces) {
    nlohmann::json n = nlohmann::json::array();
    for (const auto& x : h.normal) n.push_back(toLong(x));
    j["halfspaces"].push_back({{"normal", n}, {"offset", str(h.offset)}});
  }
  return j.dump();
}

FormalCharacter toricQuantization(const ToricModel& model) {
  require(model.prequantized(), ErrorKind::NotPrequantized, "half-space offsets must be integers");
  size_t n = model.dimension;
  FormalCharacter out(model.torus(), Basis::Weight);
  std::vector<long> lo(n), hi(n);
  for (size_t j = 0; j < n; ++j) {
    lo[j] = toLong(Rational(floorOf(model.vertices[0].point[j])));
    hi[j] = lo[j];
    for (const auto& v : model.vertices) {
      lo[j] = std::min(lo[j], toLong(Rational(floorOf(v.point[j]))));
      hi[j] = std::max(hi[j], toLong(Rational(ceilOf(v.point[j]))));
    }
  }
  Weight x(n);
  auto rec = [&](auto&& self, size_t j) -> void {
    if (j == n) {
      if (inside(model, x)) out.add(x, 1);
      return;
    }
    for (long t = lo[j]; t <= hi[j]; ++t) {
      x[j] = t;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

ConeSeries fixedPointCharacter(const ToricModel& model, const Weight& xi, const Rational& window) {
  require(xi.size() == model.dimension, ErrorKind::SystemMismatch, "direction has the wrong rank");
  ConeSeries out;
  out.system = model.torus();
  out.basis = Basis::Weight;
  out.polarizer = xi;
  out.window = window;
  std::optional<Rational> lowest;
  for (const auto& v : model.vertices) {
    std::vector<Weight> fiber;
    for (const auto& e : v.edges) {
      require(sgn(dot(e, xi)) != 0, ErrorKind::NonGenericDirection,
              "direction " + str(xi) + " is orthogonal to the edge " + str(e) + " at " + str(v.point));
      fiber.push_back(scale(Rational(-1), e));
    }
    Rational base = dot(v.point, xi);
    if (!lowest || base < *lowest) lowest = base;
    // the local expansion pairs >= 0 with xi, so only window - base of it is needed
    auto local = polarized::polarizedExpand(fiber, xi, window - base, model.dimension);
    for (const auto& [w, c] : local.entries) out.add(add(w, v.point), c);
  }
  out.offset = -*lowest;
  return out;
}

std::map<Rational, long> pushToCircle(const std::map<Weight, long>& entries, const Weight& xi, const Rational& c) {
  std::map<Rational, long> out;
  for (const auto& [w, m] : entries) {
    Rational k = dot(w, xi) - c;
    if ((out[k] += m) == 0) out.erase(k);
  }
  return out;
}

namespace {

ConeSeries circleSeries(const Rational& polarizer, const Rational& window) {
  ConeSeries s;
  s.system = polarized::torusOfRank(1);
  s.basis = Basis::Weight;
  s.polarizer = Weight{polarizer};
  s.window = window;
  return s;
}

}  // namespace

CircleDecomposition kirwanDecomposeCircle(const ToricModel& model, const Weight& xi, const Rational& c,
                                          const Rational& margin) {
  require(xi.size() == model.dimension, ErrorKind::SystemMismatch, "direction has the wrong rank");
  require(isIntegerVector(xi), ErrorKind::ConfigurationError, "circle direction must be an integer vector");
  require(sgn(margin) >= 0, ErrorKind::ConfigurationError, "margin must be nonnegative");
  std::map<Rational, std::vector<size_t>> critical;
  for (size_t i = 0; i < model.vertices.size(); ++i) {
    const auto& v = model.vertices[i];
    for (const auto& e : v.edges)
      require(sgn(dot(e, xi)) != 0, ErrorKind::NonGenericDirection,
              "direction " + str(xi) + " fixes the edge " + str(e) + " at " + str(v.point) +
                  "; only isolated fixed points are supported");
    Rational m = dot(v.point, xi) - c;
    require(sgn(m) != 0 || model.dimension == 0, ErrorKind::SingularShift,
            "level " + str(c) + " is the critical value of the fixed point " + str(v.point));
    critical[m].push_back(i);
  }

  CircleDecomposition d;
  d.xi = xi;
  d.c = c;
  d.low = critical.begin()->first - margin;
  d.high = critical.rbegin()->first + margin;

  Rational maxPairing = d.high + c;
  auto fixed = fixedPointCharacter(model, xi, maxPairing);
  d.global = circleSeries(1, d.high);
  d.global.offset = -critical.begin()->first;
  for (const auto& [k, m] : pushToCircle(fixed.entries, xi, c)) d.global.add(Weight{k}, m);

  bool zeroInImage = sgn(critical.begin()->first) <= 0 && sgn(critical.rbegin()->first) >= 0;
  std::map<Rational, long> others;
  for (const auto& [m, verts] : critical) {
    if (sgn(m) == 0) continue;
    int s = sgn(m);
    KirwanComponent comp;
    comp.alpha = Weight{m};
    comp.vertices = verts;
    comp.localSeries = circleSeries(s, s > 0 ? d.high : -d.low);
    comp.localSeries.offset = -(s * m);
    for (size_t i : verts) {
      std::vector<Weight> fiber;
      for (const auto& e : model.vertices[i].edges) fiber.push_back(Weight{-dot(e, xi)});
      Rational unshifted = s > 0 ? d.high - m : m - d.low;
      auto local = polarized::polarizedExpand(fiber, Weight{Rational(s)}, unshifted, 1);
      for (const auto& [w, coeff] : local.entries) comp.localSeries.add(Weight{w[0] + m}, coeff);
    }
    comp.localSeries.validate();
    for (const auto& [w, coeff] : comp.localSeries.entries)
      if (w[0] >= d.low && w[0] <= d.high && (others[w[0]] += coeff) == 0) others.erase(w[0]);
    d.components.push_back(std::move(comp));
  }
  if (zeroInImage) {
    KirwanComponent zero;
    zero.alpha = Weight{Rational(0)};
    zero.containsZero = true;
    if (auto it = critical.find(Rational(0)); it != critical.end()) zero.vertices = it->second;
    zero.localSeries = circleSeries(1, d.high);
    zero.localSeries.floor = d.low;
    for (const auto& [w, coeff] : d.global.entries)
      if (w[0] >= d.low) zero.localSeries.add(w, coeff);
    for (const auto& [k, coeff] : others) zero.localSeries.add(Weight{k}, -coeff);
    zero.localSeries.validate();
    d.components.push_back(std::move(zero));
  }
  return d;
}

std::map<Rational, long> componentSum(const CircleDecomposition& d) {
  std::map<Rational, long> out;
  for (const auto& comp : d.components)
    for (const auto& [w, c] : comp.localSeries.entries)
      if (w[0] >= d.low && w[0] <= d.high && (out[w[0]] += c) == 0) out.erase(w[0]);
  return out;
}

long sliceLatticeCount(const ToricModel& model, const Weight& xi, const Rational& c) {
  long count = 0;
  for (const auto& [w, m] : toricQuantization(model).entries)
    if (dot(w, xi) == c) count += m;
  return count;
}

QRReport qrCheckCircle(const ToricModel& model, const Weight& xi, const Rational& c) {
  require(isInteger(c), ErrorKind::ConfigurationError, "level " + str(c) + " must be an integer");
  Integer g = 0;
  for (const auto& x : xi) g = gcd(g, Integer(x.get_num()));
  require(model.dimension == 0 || g == 1, ErrorKind::ConfigurationError, "circle direction must be primitive");
  auto d = kirwanDecomposeCircle(model, xi, c);
  auto lattice = toricQuantization(model);
  QRReport report;
  report.reduced = sliceLatticeCount(model, xi, c);
  auto circle = pushToCircle(lattice.entries, xi, c);
  report.mult0 = circle.count(Rational(0)) ? circle.at(Rational(0)) : 0;
  std::erase_if(circle, [&](const auto& kv) { return kv.first < d.low || kv.first > d.high; });
  report.sumMatches = componentSum(d) == circle;
  for (const auto& comp : d.components) {
    long at0 = comp.localSeries.at(Weight{Rational(0)});
    if (comp.containsZero) {
      report.zeroComponent = at0;
      continue;
    }
    report.components.push_back({comp.alpha[0], at0});
    try {
      polarized::vanishingCheck(comp.localSeries, comp.localSeries.polarizer, true);
    } catch (const Error& e) {
      fail(ErrorKind::QRViolation, "component at " + str(comp.alpha[0]) + ": " + e.what());
    }
  }
  if (!report.sumMatches)
    fail(ErrorKind::QRViolation, "components do not add up to the lattice-point character");
  if (report.zeroComponent != report.reduced)
    fail(ErrorKind::QRViolation, "component at 0 has weight-0 coefficient " + std::to_string(report.zeroComponent) +
                                     ", reduced slice has " + std::to_string(report.reduced) + " lattice points");
  if (report.mult0 != report.reduced)
    fail(ErrorKind::QRViolation, "invariant part " + std::to_string(report.mult0) + " differs from reduced count " +
                                     std::to_string(report.reduced));
  report.ok = true;
  return report;
}

FormalCharacter coadjointQuantization(const CoadjointModel& model) {
  const auto& rs = model.system;
  rs->check(model.lambda);
  require(rs->isAlgebraicallyIntegral(model.lambda) && rs->isLatticeWeight(model.lambda), ErrorKind::NotIntegral,
          str(model.lambda) + " is not integral for " + rs->label());
  require(rs->isDominant(model.lambda) && rs->isRegular(model.lambda), ErrorKind::NotDominant,
          str(model.lambda) + " is not strictly dominant for " + rs->label());
  auto pair = lie::parsePair(rs->label() + ":T");
  Weight twisted = add(pair.mapToH(model.lambda), induction::coadjointSpinorShift(pair));
  FormalCharacter chi(pair.h, Basis::Irreducible);
  chi.add(twisted, 1);
  auto out = induction::inductCharacter(pair, chi);
  if (!(out.entries.size() == 1 && out.entries.begin()->first == model.lambda && out.entries.begin()->second == 1))
    fail(ErrorKind::ConventionMismatch, "induced character of " + str(model.lambda) + " is not V_" + str(model.lambda));
  return out;
}

ProductReport productQRCheck(const lie::RootSystemPtr& rs, const Weight& lambda, const Weight& mu) {
  for (const auto& v : {lambda, mu}) {
    rs->check(v);
    require(rs->isAlgebraicallyIntegral(v), ErrorKind::NotIntegral, str(v) + " is not integral");
    require(rs->isDominant(v) && rs->isRegular(v), ErrorKind::NotDominant, str(v) + " is not strictly dominant");
  }
  ProductReport r;
  r.quantized = characters::trivialMultiplicity(
      characters::tensorDecompose(rs, lambda, characters::dualHighestWeight(rs, mu)));
  r.reduced = lambda == mu ? 1 : 0;
  r.equal = r.quantized == r.reduced;
  if (!r.equal)
    fail(ErrorKind::QRViolation, "trivial multiplicity " + std::to_string(r.quantized) + " for " + str(lambda) +
                                     " x " + str(mu) + "*, expected " + std::to_string(r.reduced));
  return r;
}

}  // namespace diracforge::qr
