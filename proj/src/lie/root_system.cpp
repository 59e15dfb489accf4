#include "diracforge/lie/root_system.hpp"

#include "diracforge/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace diracforge::lie {

std::string_view familyName(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::Torus: return "Torus";
  }
  return "?";
}

Family parseFamily(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "Torus" || s == "T") return Family::Torus;
  fail(ErrorKind::UnsupportedType, "unknown family '" + std::string(s) + "'");
}

size_t expectedPositiveRoots(const Factor& f) {
  size_t n = static_cast<size_t>(f.rank);
  switch (f.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::Torus: return 0;
  }
  return 0;
}

Weight WeylElement::act(const RootSystem& rs, Weight w) const {
  for (size_t i : word) w = rs.reflect(i, std::move(w));
  return w;
}

namespace {

void checkSupported(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1 && rank <= 6; break;
    case Family::B:
    case Family::C: ok = rank >= 2 && rank <= 4; break;
    case Family::D: ok = rank == 4; break;
    case Family::Torus: ok = rank >= 1 && rank <= 4; break;
  }
  if (!ok)
    fail(ErrorKind::UnsupportedType,
         std::string(familyName(family)) + std::to_string(rank) + " is outside the supported set");
}

// (alpha_i, alpha_j) with long roots of squared length 2, Bourbaki numbering.
RMatrix simpleRootForm(Family family, int rank) {
  size_t n = static_cast<size_t>(rank);
  RMatrix s(n, n);
  auto link = [&](size_t i, size_t j, Rational v) { s(i, j) = v; s(j, i) = v; };
  switch (family) {
    case Family::A:
      for (size_t i = 0; i < n; ++i) s(i, i) = 2;
      for (size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (size_t i = 0; i < n; ++i) s(i, i) = i + 1 < n ? 2 : 1;
      for (size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::C:
      for (size_t i = 0; i < n; ++i) s(i, i) = i + 1 < n ? 1 : 2;
      for (size_t i = 0; i + 2 < n; ++i) link(i, i + 1, Rational(-1, 2));
      link(n - 2, n - 1, -1);
      break;
    case Family::D:
      for (size_t i = 0; i < n; ++i) s(i, i) = 2;
      for (size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::Torus:
      break;
  }
  return s;
}

std::string factorLabel(const Factor& f) {
  return (f.family == Family::Torus ? std::string("T") : std::string(familyName(f.family))) + std::to_string(f.rank);
}

}  // namespace

RootSystem::RootSystem(std::string label, std::vector<Factor> factors, std::vector<Weight> simpleRoots,
                       std::vector<size_t> corootCoordinate, RMatrix gram, RMatrix lattice)
    : label_(std::move(label)),
      factors_(std::move(factors)),
      simpleRoots_(std::move(simpleRoots)),
      corootCoordinate_(std::move(corootCoordinate)),
      gram_(std::move(gram)),
      lattice_(std::move(lattice)) {
  size_t n = gram_.rows();
  require(gram_.cols() == n && lattice_.rows() == n && lattice_.cols() == n, ErrorKind::DimensionMismatch,
          "gram and lattice must be square of the same size");
  require(corootCoordinate_.size() == simpleRoots_.size(), ErrorKind::DimensionMismatch,
          "one coroot coordinate per simple root");
  for (const auto& a : simpleRoots_) check(a);
  latticeInverse_ = inverse(lattice_);

  size_t s = simpleRoots_.size();
  cartan_ = RMatrix(s, s);
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j) {
      cartan_(i, j) = corootPairing(simpleRoots_[i], simpleRoots_[j]);
      require(simpleRoots_[i][corootCoordinate_[j]] == cartan_(i, j), ErrorKind::InvariantViolated,
              label_ + ": coroot coordinates disagree with the gram matrix");
      if (i == j)
        require(cartan_(i, j) == 2, ErrorKind::InvariantViolated, label_ + ": Cartan diagonal must be 2");
      else
        require(isInteger(cartan_(i, j)) && sgn(cartan_(i, j)) <= 0, ErrorKind::InvariantViolated,
                label_ + ": Cartan off-diagonal entries must be nonpositive integers");
    }

  // positive definite iff every pivot of symmetric elimination is positive
  {
    RMatrix m = gram_;
    for (size_t c = 0; c < n; ++c) {
      require(sgn(m(c, c)) > 0, ErrorKind::InvariantViolated, label_ + ": gram is not positive definite");
      for (size_t r = c + 1; r < n; ++r) {
        if (sgn(m(r, c)) == 0) continue;
        Rational f = m(r, c) / m(c, c);
        for (size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
      }
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      require(gram_(i, j) == gram_(j, i), ErrorKind::InvariantViolated, label_ + ": gram is not symmetric");

  computePositiveRoots();

  Weight fromRoots = rhoFromRoots(), fromFund = rhoFromFundamentals();
  require(fromRoots == fromFund, ErrorKind::InvariantViolated,
          label_ + ": half-sum of positive roots differs from the sum of fundamental weights");
  rho_ = fromRoots;
  weylOrder_ = weylOrbit(rho_).size();
}

void RootSystem::computePositiveRoots() {
  size_t s = simpleRoots_.size();
  std::set<std::vector<long>> seen;
  std::deque<std::vector<long>> queue;
  for (size_t i = 0; i < s; ++i) {
    std::vector<long> c(s, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  auto toWeight = [&](const std::vector<long>& c) {
    Weight w = zero();
    for (size_t i = 0; i < s; ++i)
      if (c[i]) w = add(w, scale(Rational(c[i]), simpleRoots_[i]));
    return w;
  };
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    Weight beta = toWeight(c);
    for (size_t i = 0; i < s; ++i) {
      long p = toLong(beta[corootCoordinate_[i]]);
      std::vector<long> next = c;
      next[i] -= p;
      bool isSimpleI = std::count(c.begin(), c.end(), 0L) == static_cast<long>(s) - 1 && c[i] == 1;
      if (isSimpleI || p >= 0) continue;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<std::vector<long>> sorted(seen.begin(), seen.end());
  auto height = [](const std::vector<long>& c) {
    long h = 0;
    for (long x : c) h += x;
    return h;
  };
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  rootCoefficients_ = sorted;
  positiveRoots_.clear();
  for (const auto& c : sorted) positiveRoots_.push_back(toWeight(c));
}

RootSystemPtr RootSystem::build(Family family, int rank) { return product({{family, rank}}); }

RootSystemPtr RootSystem::product(const std::vector<Factor>& factors) {
  require(!factors.empty(), ErrorKind::UnsupportedType, "empty factor list");
  size_t n = 0;
  for (const auto& f : factors) {
    checkSupported(f.family, f.rank);
    n += static_cast<size_t>(f.rank);
  }
  RMatrix gram(n, n);
  std::vector<Weight> simple;
  std::vector<size_t> coroot;
  std::string label;
  size_t offset = 0;
  for (const auto& f : factors) {
    size_t r = static_cast<size_t>(f.rank);
    if (!label.empty()) label += "x";
    label += factorLabel(f);
    if (f.family == Family::Torus) {
      for (size_t i = 0; i < r; ++i) gram(offset + i, offset + i) = 1;
    } else {
      RMatrix s = simpleRootForm(f.family, f.rank);
      RMatrix cartan(r, r), half(r, r);
      for (size_t i = 0; i < r; ++i) {
        half(i, i) = s(i, i) / 2;
        for (size_t j = 0; j < r; ++j) cartan(i, j) = 2 * s(i, j) / s(j, j);
      }
      // A Omega = diag((alpha_i, alpha_i)/2)
      RMatrix omega = solve(cartan, half);
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) gram(offset + i, offset + j) = omega(i, j);
      for (size_t i = 0; i < r; ++i) {
        Weight a(n, 0);
        for (size_t j = 0; j < r; ++j) a[offset + j] = cartan(i, j);
        simple.push_back(std::move(a));
        coroot.push_back(offset + i);
      }
    }
    offset += r;
  }
  auto rs = std::make_shared<RootSystem>(label, factors, simple, coroot, gram, RMatrix::identity(n));
  size_t expected = 0;
  for (const auto& f : factors) expected += expectedPositiveRoots(f);
  require(rs->positiveRoots().size() == expected, ErrorKind::InvariantViolated,
          label + ": positive root count " + std::to_string(rs->positiveRoots().size()) + ", expected " +
              std::to_string(expected));
  // long roots have squared length 2
  for (const auto& a : rs->positiveRoots())
    require(rs->norm2(a) <= 2, ErrorKind::InvariantViolated, label + ": root longer than normalization");
  return rs;
}

RootSystemPtr RootSystem::parse(std::string_view label) {
  std::vector<Factor> factors;
  size_t pos = 0;
  while (pos < label.size()) {
    size_t end = label.find('x', pos);
    if (end == std::string_view::npos) end = label.size();
    std::string_view part = label.substr(pos, end - pos);
    size_t digits = 0;
    while (digits < part.size() && !std::isdigit(static_cast<unsigned char>(part[digits]))) ++digits;
    if (digits == 0 || digits == part.size())
      fail(ErrorKind::ParseError, "bad root system label '" + std::string(label) + "'");
    Family fam = parseFamily(part.substr(0, digits));
    int rank = 0;
    for (char ch : part.substr(digits)) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        fail(ErrorKind::ParseError, "bad root system label '" + std::string(label) + "'");
      rank = rank * 10 + (ch - '0');
    }
    factors.push_back({fam, rank});
    pos = end + 1;
  }
  return product(factors);
}

RootSystemPtr RootSystem::fromJson(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::ParseError, std::string("root system descriptor: ") + e.what());
  }
  if (!j.contains("factors") || !j["factors"].is_array())
    fail(ErrorKind::ParseError, "root system descriptor: missing field 'factors'");
  std::vector<Factor> factors;
  for (size_t k = 0; k < j["factors"].size(); ++k) {
    const auto& f = j["factors"][k];
    if (!f.contains("family") || !f["family"].is_string())
      fail(ErrorKind::ParseError, "root system descriptor: factors[" + std::to_string(k) + "].family");
    if (!f.contains("rank") || !f["rank"].is_number_integer())
      fail(ErrorKind::ParseError, "root system descriptor: factors[" + std::to_string(k) + "].rank");
    factors.push_back({parseFamily(f["family"].get<std::string>()), f["rank"].get<int>()});
  }
  return product(factors);
}

std::string RootSystem::toJson() const {
  nlohmann::json j;
  j["factors"] = nlohmann::json::array();
  for (const auto& f : factors_) j["factors"].push_back({{"family", familyName(f.family)}, {"rank", f.rank}});
  return j.dump();
}

bool RootSystem::isTorusCoordinate(size_t j) const {
  return std::find(corootCoordinate_.begin(), corootCoordinate_.end(), j) == corootCoordinate_.end();
}

Weight RootSystem::fundamentalWeight(size_t i) const {
  Weight w = zero();
  w[corootCoordinate_.at(i)] = 1;
  return w;
}

Weight RootSystem::rhoFromRoots() const {
  Weight w = zero();
  for (const auto& a : positiveRoots_) w = add(w, a);
  return scale(Rational(1, 2), w);
}

Weight RootSystem::rhoFromFundamentals() const {
  Weight w = zero();
  for (size_t i = 0; i < simpleRoots_.size(); ++i) w = add(w, fundamentalWeight(i));
  return w;
}

void RootSystem::check(const Weight& w) const {
  require(w.size() == rank(), ErrorKind::SystemMismatch,
          "weight " + str(w) + " does not belong to " + label_ + " (rank " + std::to_string(rank()) + ")");
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
  check(a);
  check(b);
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0 && sgn(gram_(i, j)) != 0) s += a[i] * gram_(i, j) * b[j];
  }
  return s;
}

Rational RootSystem::corootPairing(const Weight& w, const Weight& alpha) const {
  return 2 * inner(w, alpha) / norm2(alpha);
}

Weight RootSystem::reflect(size_t i, Weight w) const {
  check(w);
  Rational p = w[corootCoordinate_.at(i)];
  if (sgn(p) == 0) return w;
  const Weight& a = simpleRoots_[i];
  for (size_t k = 0; k < w.size(); ++k)
    if (sgn(a[k]) != 0) w[k] -= p * a[k];
  return w;
}

bool RootSystem::isDominant(const Weight& w) const {
  check(w);
  for (size_t c : corootCoordinate_)
    if (sgn(w[c]) < 0) return false;
  return true;
}

bool RootSystem::isRegular(const Weight& w) const {
  for (const auto& a : positiveRoots_)
    if (sgn(inner(w, a)) == 0) return false;
  return true;
}

bool RootSystem::isAlgebraicallyIntegral(const Weight& w) const {
  check(w);
  for (size_t c : corootCoordinate_)
    if (!isInteger(w[c])) return false;
  return true;
}

bool RootSystem::isLatticeWeight(const Weight& w) const {
  check(w);
  for (const auto& x : latticeInverse_.apply(w))
    if (!isInteger(x)) return false;
  return true;
}

std::pair<Weight, WeylElement> RootSystem::makeDominant(Weight w) const {
  check(w);
  WeylElement el;
  for (;;) {
    size_t i = 0;
    while (i < corootCoordinate_.size() && sgn(w[corootCoordinate_[i]]) >= 0) ++i;
    if (i == corootCoordinate_.size()) break;
    w = reflect(i, std::move(w));
    el.word.push_back(i);
  }
  return {std::move(w), std::move(el)};
}

std::vector<Weight> RootSystem::weylOrbit(const Weight& w) const {
  check(w);
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight x = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < simpleRoots_.size(); ++i) {
      Weight y = reflect(i, x);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

std::pair<size_t, int> RootSystem::findRoot(const Weight& w) const {
  for (size_t k = 0; k < positiveRoots_.size(); ++k) {
    if (positiveRoots_[k] == w) return {k, 1};
    bool neg = true;
    for (size_t j = 0; j < w.size() && neg; ++j) neg = w[j] == -positiveRoots_[k][j];
    if (neg) return {k, -1};
  }
  return {static_cast<size_t>(-1), 0};
}

}  // namespace diracforge::lie
