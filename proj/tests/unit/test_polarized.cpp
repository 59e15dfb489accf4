#include "doctest.h"

#include "diracforge/errors.hpp"
#include "diracforge/polarized/polarized.hpp"

#include <random>

using namespace diracforge;
using namespace diracforge::polarized;

namespace {

Weight w(std::initializer_list<long> xs) {
  Weight out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

ErrorKind kindOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvariantViolated;
}

// Independent oracle for one factor: the coefficients of 1/(1 - x) expanded
// in x or in 1/x, written out by hand.
std::map<Weight, long> rank1(long w0, long alpha, long window) {
  std::map<Weight, long> out;
  if (w0 * alpha < 0) {
    for (long k = 0; -k * w0 * alpha <= window; ++k) out[w({-k * w0})] = 1;
  } else {
    for (long k = 1; k * w0 * alpha <= window; ++k) out[w({k * w0})] = -1;
  }
  return out;
}

}  // namespace

TEST_CASE("rank one expansions") {
  auto neg = polarizedExpand({w({1})}, w({-1}), 5);
  CHECK(neg.entries == rank1(1, -1, 5));
  CHECK(neg.entries.size() == 6);
  CHECK(neg.at(w({-5})) == 1);
  auto pos = polarizedExpand({w({1})}, w({1}), 5);
  CHECK(pos.entries == rank1(1, 1, 5));
  CHECK(pos.at(w({5})) == -1);
  CHECK(pos.at(w({0})) == 0);
  auto broken = neg;
  broken.add(w({-2}), 1);
  CHECK_FALSE(multiplyBackIsOne(broken, {w({1})}));
  CHECK(kindOf([] { polarizedExpand({w({1, 0})}, w({0, 1}), 5); }) == ErrorKind::NonGenericPolarization);
  for (long wt : {-3, -1, 2, 4})
    for (long a : {-2, -1, 1, 3}) CHECK(polarizedExpand({w({wt})}, w({a}), 12).entries == rank1(wt, a, 12));
}

TEST_CASE("vector space index") {
  auto s = vectorSpaceIndex({w({1})}, w({1}), w({1}), 5);
  std::map<Weight, long> expected;
  for (long k = 2; k <= 6; ++k) expected[w({k})] = -1;
  CHECK(s.entries == expected);
  CHECK(s.window == 6);
  CHECK(vanishingCheck(s, w({1}), true).trivialCoefficient == 0);
  auto plain = polarizedExpand({w({2}), w({-1})}, w({1}), 7);
  auto zeroShift = vectorSpaceIndex({w({2}), w({-1})}, w({1}), w({0}), 7);
  CHECK(plain.entries == zeroShift.entries);
  CHECK(plain.window == zeroShift.window);
  auto both = vectorSpaceIndex({w({-1}), w({1})}, w({1}), w({2}), 6);
  CHECK(multiplyBackIsOne(polarizedExpand({w({-1}), w({1})}, w({1}), 6), {w({-1}), w({1})}));
  CHECK(characters::isPolarized(both, w({1}), true).polarized);
  CHECK(both.at(w({0})) == 0);
}

TEST_CASE("bundle index") {
  auto t1 = torusOfRank(1);
  FormalCharacter base(t1, characters::Basis::Weight);
  base.add(w({0}), 2);
  auto fiber = vectorSpaceIndex({w({1})}, w({1}), w({0}), 5);
  auto doubled = bundleIndex(base, {w({1})}, w({1}), w({0}), 5);
  for (const auto& [lambda, c] : fiber.entries) CHECK(doubled.at(lambda) == 2 * c);
  CHECK(doubled.entries.size() == fiber.entries.size());
  FormalCharacter trivial(t1, characters::Basis::Weight);
  trivial.add(w({0}), 1);
  CHECK(bundleIndex(trivial, {w({1})}, w({1}), w({0}), 5).entries == fiber.entries);
  // empty fiber: the base comes back unchanged
  FormalCharacter spread(t1, characters::Basis::Weight);
  spread.add(w({0}), 1);
  spread.add(w({2}), 3);
  auto bare = bundleIndex(spread, {}, w({1}), w({0}), 5, false);
  CHECK(bare.entries == spread.entries);
  CHECK(kindOf([&] { bundleIndex(spread, {w({1})}, w({1}), w({0}), 5); }) == ErrorKind::NonTrivialBaseAction);
}

TEST_CASE("vanishing check") {
  auto t1 = torusOfRank(1);
  characters::ConeSeries s;
  s.system = t1;
  s.polarizer = w({1});
  s.window = 3;
  s.add(w({0}), 1);
  CHECK(kindOf([&] { vanishingCheck(s, w({1}), true); }) == ErrorKind::PolarizationViolated);
  CHECK(characters::isPolarized(s, w({1}), true).witness == w({0}));
  characters::ConeSeries p = s;
  p.entries.clear();
  p.add(w({1}), 4);
  p.add(w({3}), -1);
  auto report = vanishingCheck(p, w({1}), false);
  CHECK(report.polarized);
}

TEST_CASE("randomized polarization properties") {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<long> coord(-3, 3);
  std::uniform_int_distribution<int> count(0, 3), rankPick(1, 2), windowPick(0, 8);
  int cases = 0;
  while (cases < 200) {
    size_t r = static_cast<size_t>(rankPick(rng));
    auto draw = [&] {
      Weight v;
      for (size_t j = 0; j < r; ++j) v.emplace_back(coord(rng));
      return v;
    };
    Weight alpha = draw(), shift = draw();
    std::vector<Weight> fiber;
    for (int k = count(rng); k > 0; --k) fiber.push_back(draw());
    bool generic = !isZeroVec(alpha);
    for (const auto& f : fiber) generic = generic && sgn(dot(f, alpha)) != 0;
    if (!generic) continue;
    ++cases;
    Rational window = windowPick(rng);
    auto series = polarizedExpand(fiber, alpha, window, r);
    CHECK(multiplyBackIsOne(series, fiber));
    CHECK(characters::isPolarized(series, alpha, false).polarized);
    // support lies in the cone spanned by sign(<w, alpha>) w: every term is a
    // nonnegative combination, which for one factor means a multiple of the ray
    if (fiber.size() == 1)
      for (const auto& [lambda, c] : series.entries) {
        Weight ray = sgn(dot(fiber[0], alpha)) > 0 ? fiber[0] : scale(Rational(-1), fiber[0]);
        Rational t = dot(lambda, ray) / dot(ray, ray);
        CHECK(sgn(t) >= 0);
        CHECK(scale(t, ray) == lambda);
      }
    auto shifted = vectorSpaceIndex(fiber, alpha, shift, window, r);
    if (sgn(dot(shift, alpha)) > 0) {
      CHECK(characters::isPolarized(shifted, alpha, true).polarized);
      CHECK(shifted.at(Weight(r, 0)) == 0);
    }
    // a second generic direction expands the same rational function
    Weight beta = scale(Rational(-1), alpha);
    auto other = polarizedExpand(fiber, beta, window, r);
    CHECK(multiplyBackIsOne(other, fiber));
  }
}
