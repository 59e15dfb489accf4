#include "doctest.h"

#include "diracforge/lie/pair.hpp"

#include <random>

using namespace diracforge;
using namespace diracforge::lie;

namespace {

Weight w(std::initializer_list<long> xs) {
  Weight out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("A1 basics") {
  auto a1 = RootSystem::build(Family::A, 1);
  CHECK(a1->positiveRoots().size() == 1);
  CHECK(a1->rho() == w({1}));
  CHECK(a1->norm2(w({1})) == Rational(1, 2));
  CHECK(a1->norm2(a1->simpleRoots()[0]) == 2);
  CHECK(a1->norm2(a1->rho()) == Rational(1, 2));
  CHECK(a1->isRegular(w({1})));
  CHECK_FALSE(a1->isRegular(w({0})));

  auto [dom, el] = a1->makeDominant(w({-3}));
  CHECK(dom == w({3}));
  CHECK(el.word == std::vector<size_t>{0});
  CHECK(el.sign() == -1);
  auto [dom0, el0] = a1->makeDominant(w({0}));
  CHECK(dom0 == w({0}));
  CHECK(el0.word.empty());
  CHECK(el0.sign() == 1);

  CHECK(a1->weylOrbit(w({2})) == std::vector<Weight>{w({-2}), w({2})});
  CHECK(a1->weylOrbit(w({0})).size() == 1);
}

TEST_CASE("A2 basics") {
  auto a2 = RootSystem::build(Family::A, 2);
  CHECK(a2->positiveRoots().size() == 3);
  CHECK(a2->rho() == w({1, 1}));
  CHECK(a2->norm2(a2->rho()) == 2);
  CHECK_FALSE(a2->isRegular(w({1, 0})));
  CHECK(a2->weylOrbit(a2->rho()).size() == 6);
  CHECK(a2->weylOrder() == 6);

  auto [dom, el] = a2->makeDominant(w({-1, 2}));
  CHECK(a2->isDominant(dom));
  CHECK(el.act(*a2, w({-1, 2})) == dom);
  CHECK(dom == w({1, 1}));
  CHECK(el.sign() == -1);
}

TEST_CASE("torus system") {
  auto t1 = RootSystem::build(Family::Torus, 1);
  CHECK(t1->positiveRoots().empty());
  CHECK(t1->rho() == w({0}));
  CHECK(t1->weylOrder() == 1);
  CHECK_THROWS_AS(RootSystem::build(Family::Torus, 5), Error);
  CHECK_THROWS_AS(RootSystem::build(Family::D, 3), Error);
}

TEST_CASE("supported systems have the expected root data") {
  struct Case {
    const char* label;
    size_t roots;
    size_t weyl;
  };
  for (auto c : {Case{"A1", 1, 2}, Case{"A2", 3, 6}, Case{"A3", 6, 24}, Case{"A4", 10, 120}, Case{"B2", 4, 8},
                 Case{"C2", 4, 8}, Case{"D4", 12, 192}, Case{"T3", 0, 1}, Case{"A1xT1", 1, 2},
                 Case{"A1xA1", 2, 4}}) {
    CAPTURE(c.label);
    auto rs = RootSystem::parse(c.label);
    CHECK(rs->positiveRoots().size() == c.roots);
    CHECK(rs->weylOrder() == c.weyl);
    CHECK(rs->rhoFromRoots() == rs->rhoFromFundamentals());
    Rational longest = 0;
    for (const auto& a : rs->positiveRoots()) longest = std::max(longest, rs->norm2(a));
    if (c.roots) CHECK(longest == 2);
  }
  auto b2 = RootSystem::parse("B2");
  CHECK(b2->cartanMatrix()(0, 1) == -2);
  CHECK(b2->cartanMatrix()(1, 0) == -1);
}

TEST_CASE("json descriptor round trip") {
  auto rs = RootSystem::fromJson(R"({"factors":[{"family":"A","rank":2},{"family":"Torus","rank":1}]})");
  CHECK(rs->label() == "A2xT1");
  CHECK(RootSystem::fromJson(rs->toJson())->label() == "A2xT1");
  CHECK_THROWS_AS(RootSystem::fromJson(R"({"factors":[{"family":"E","rank":6}]})"), Error);
  CHECK_THROWS_AS(RootSystem::fromJson("{"), Error);
}

TEST_CASE("Weyl invariance and orbit properties") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (const char* label : {"A2", "B2", "C2", "A3", "A1xT1"}) {
    auto rs = RootSystem::parse(label);
    for (int trial = 0; trial < 20; ++trial) {
      Weight a(rs->rank()), b(rs->rank());
      for (auto& x : a) x = Rational(num(rng), den(rng)), x.canonicalize();
      for (auto& x : b) x = Rational(num(rng), den(rng)), x.canonicalize();
      auto [da, wa] = rs->makeDominant(a);
      CHECK(rs->inner(wa.act(*rs, a), wa.act(*rs, b)) == rs->inner(a, b));
      auto [again, wAgain] = rs->makeDominant(da);
      CHECK(again == da);
      CHECK(wAgain.word.empty());
    }
    for (int trial = 0; trial < 10; ++trial) {
      Weight a(rs->rank());
      for (auto& x : a) x = num(rng);
      size_t orbit = rs->weylOrbit(a).size();
      CHECK(rs->weylOrder() % orbit == 0);
      CHECK((orbit == rs->weylOrder()) == rs->isRegular(a));
    }
  }
}

TEST_CASE("Levi pairs") {
  auto torus = parsePair("A1:T");
  CHECK(torus.h->positiveRoots().empty());
  CHECK(torus.mapToH(w({3})) == w({3}));
  CHECK(torus.label == "A1:T");

  auto u2 = parsePair("A2:A1xT1");
  CHECK(u2.removedNodes == std::vector<size_t>{1});
  // t = lambda1 + 2 lambda2
  CHECK(u2.mapToH(w({1, 0})) == w({1, 1}));
  CHECK(u2.mapToH(w({0, 1})) == w({0, 2}));
  CHECK(u2.h->gram()(1, 1) == Rational(1, 6));
  CHECK(u2.h->gram()(0, 0) == Rational(1, 2));
  CHECK(u2.h->positiveRoots().size() == 1);
  CHECK(u2.pRootsInG.size() == 2);
  CHECK(u2.h->rho() == w({1, 0}));
  CHECK(u2.h->isLatticeWeight(w({1, 1})));
  CHECK_FALSE(u2.h->isLatticeWeight(w({0, 3})));
  for (const auto& p : u2.pWeights()) CHECK(u2.h->norm2(p) == 2);

  auto same = parsePair("A2:A2");
  CHECK(same.pRootsInG.empty());
  CHECK_THROWS_AS(parsePair("A2:B2"), Error);
}
