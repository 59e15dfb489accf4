#include "doctest.h"

#include "diracforge/characters/cache.hpp"
#include "diracforge/characters/io.hpp"
#include "diracforge/errors.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <thread>

using namespace diracforge;
using namespace diracforge::lie;
using namespace diracforge::characters;

namespace {

Weight w(std::initializer_list<long> xs) {
  Weight out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Kostant's multiplicity formula with a memoized partition function over the
// positive roots in simple-root coordinates. Shares nothing with Freudenthal.
struct KostantOracle {
  RootSystemPtr rs;
  RMatrix cartanInverse;
  std::vector<std::vector<long>> roots;
  std::map<std::pair<std::vector<long>, size_t>, long> memo;

  explicit KostantOracle(RootSystemPtr r) : rs(std::move(r)), cartanInverse(inverse(rs->cartanMatrix())) {
    roots = rs->positiveRootCoefficients();
  }

  // coefficients of a (semisimple) weight difference in the simple roots
  std::optional<std::vector<long>> rootCoords(const Weight& nu) const {
    std::vector<long> out;
    for (size_t j = 0; j < rs->semisimpleRank(); ++j) {
      Rational c = 0;
      for (size_t i = 0; i < rs->semisimpleRank(); ++i) c += nu[rs->simpleCoordinate(i)] * cartanInverse(i, j);
      c.canonicalize();
      if (!isInteger(c)) return std::nullopt;
      out.push_back(toLong(c));
    }
    return out;
  }

  long partitions(std::vector<long> nu, size_t k) {
    for (long x : nu)
      if (x < 0) return 0;
    if (k == roots.size()) {
      for (long x : nu)
        if (x) return 0;
      return 1;
    }
    auto key = std::make_pair(nu, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long total = 0;
    std::vector<long> cur = nu;
    for (;;) {
      bool neg = false;
      for (long x : cur) neg |= x < 0;
      if (neg) break;
      total += partitions(cur, k + 1);
      for (size_t i = 0; i < cur.size(); ++i) cur[i] -= roots[k][i];
    }
    memo[key] = total;
    return total;
  }

  long multiplicity(const Weight& lambda, const Weight& mu) {
    long m = 0;
    Weight shifted = add(lambda, rs->rho());
    for (const auto& img : weylImages(shifted)) {
      auto c = rootCoords(sub(img.first, add(mu, rs->rho())));
      if (c) m += img.second * partitions(*c, 0);
    }
    return m;
  }

  // every w(x) with sign, by breadth-first search over reflections (x regular)
  std::vector<std::pair<Weight, int>> weylImages(const Weight& x) const {
    std::map<Weight, int> seen{{x, 1}};
    std::vector<Weight> frontier{x};
    while (!frontier.empty()) {
      std::vector<Weight> next;
      for (const auto& y : frontier)
        for (size_t i = 0; i < rs->semisimpleRank(); ++i) {
          Weight z = rs->reflect(i, y);
          if (seen.emplace(z, -seen[y]).second) next.push_back(z);
        }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }
};

std::vector<Weight> boxWeights(size_t rank, long maxCoord) {
  std::vector<Weight> out{Weight{}};
  for (size_t j = 0; j < rank; ++j) {
    std::vector<Weight> next;
    for (const auto& p : out)
      for (long c = 0; c <= maxCoord; ++c) {
        Weight q = p;
        q.emplace_back(c);
        next.push_back(q);
      }
    out = std::move(next);
  }
  return out;
}

long totalDimension(const FormalCharacter& dec) {
  long d = 0;
  for (const auto& [lambda, m] : dec.entries) d += m * weylDimension(dec.system, lambda).get_si();
  return d;
}

}  // namespace

TEST_CASE("A1 characters match the raising/lowering ladder") {
  auto a1 = RootSystem::build(Family::A, 1);
  for (long n = 0; n <= 8; ++n) {
    FormalCharacter chi = irreducibleCharacter(a1, w({n}));
    FormalCharacter ladder(a1, Basis::Weight);
    for (long k = 0; k <= n; ++k) ladder.add(w({n - 2 * k}), 1);
    CHECK(chi == ladder);
  }
  auto three = irreducibleCharacter(a1, w({3}));
  CHECK(three.entries.size() == 4);
  for (long x : {-3, -1, 1, 3}) CHECK(three.at(w({x})) == 1);
}

TEST_CASE("A2 adjoint and trivial characters") {
  auto a2 = RootSystem::build(Family::A, 2);
  auto adj = irreducibleCharacter(a2, a2->rho());
  CHECK(adj.at(w({0, 0})) == 2);
  CHECK(adj.dimension() == 8);
  for (const auto& a : a2->positiveRoots()) {
    CHECK(adj.at(a) == 1);
    CHECK(adj.at(scale(Rational(-1), a)) == 1);
  }
  for (const char* label : {"A1", "A2", "B2", "C2", "A3", "D4", "A1xT1", "T2"}) {
    auto rs = RootSystem::parse(label);
    auto chi = irreducibleCharacter(rs, rs->zero());
    CHECK(chi.entries.size() == 1);
    CHECK(chi.at(rs->zero()) == 1);
  }
  CHECK_THROWS_AS(irreducibleCharacter(a2, w({-1, 2})), Error);
  try {
    irreducibleCharacter(a2, w({-1, 2}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDominant);
  }
  try {
    irreducibleCharacter(a2, Weight{Rational(1, 2), 0});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIntegral);
  }
}

TEST_CASE("Freudenthal agrees with Kostant's partition formula") {
  struct Case {
    const char* label;
    long maxCoord;
  };
  for (auto c : {Case{"A2", 3}, Case{"B2", 2}, Case{"C2", 2}, Case{"A3", 1}, Case{"A1xA1", 2}}) {
    auto rs = RootSystem::parse(c.label);
    KostantOracle oracle(rs);
    for (const auto& lambda : boxWeights(rs->rank(), c.maxCoord)) {
      CAPTURE(c.label);
      CAPTURE(str(lambda));
      auto chi = irreducibleCharacter(rs, lambda);
      CHECK(chi.at(lambda) == 1);
      CHECK(chi.isWeylInvariant());
      CHECK(chi.dimension() == weylDimension(rs, lambda).get_si());
      for (const auto& [mu, m] : chi.entries)
        if (rs->isDominant(mu)) CHECK(m == oracle.multiplicity(lambda, mu));
    }
  }
}

TEST_CASE("dimension check on larger systems") {
  auto d4 = RootSystem::parse("D4");
  CHECK(irreducibleCharacter(d4, w({0, 1, 0, 0})).dimension() == 28);
  CHECK(irreducibleCharacter(d4, w({1, 0, 0, 0})).dimension() == 8);
  auto b3 = RootSystem::parse("B3");
  CHECK(irreducibleCharacter(b3, w({0, 0, 1})).dimension() == 8);
  CHECK(weylDimension(b3, w({1, 1, 1})) == 512);
  CHECK(irreducibleCharacter(b3, w({1, 1, 1})).dimension() == 512);
}

TEST_CASE("tensor products") {
  auto a1 = RootSystem::build(Family::A, 1);
  auto prod = tensorDecompose(a1, w({1}), w({1}));
  CHECK(prod.entries == std::map<Weight, long>{{w({0}), 1}, {w({2}), 1}});
  CHECK(trivialMultiplicity(prod) == 1);
  CHECK(trivialMultiplicity(tensorDecompose(a1, w({1}), w({2}))) == 0);

  FormalCharacter given(a1, Basis::Irreducible);
  given.add(w({0}), 1);
  given.add(w({2}), 1);
  CHECK(trivialMultiplicity(given) == 1);

  auto a2 = RootSystem::build(Family::A, 2);
  auto sq = tensorDecompose(a2, w({1, 0}), w({1, 0}));
  CHECK(sq.entries == std::map<Weight, long>{{w({2, 0}), 1}, {w({0, 1}), 1}});
  CHECK(tensorDecompose(a2, w({2, 1}), w({0, 0})).entries == std::map<Weight, long>{{w({2, 1}), 1}});
  CHECK(dualHighestWeight(a2, w({2, 1})) == w({1, 2}));
}

TEST_CASE("tensor products are symmetric, associative and conserve dimension") {
  for (const char* label : {"A1", "A2"}) {
    auto rs = RootSystem::parse(label);
    auto box = boxWeights(rs->rank(), 3);
    std::mt19937 rng(5);
    std::uniform_int_distribution<size_t> pick(0, box.size() - 1);
    for (int trial = 0; trial < (rs->rank() == 1 ? 30 : 8); ++trial) {
      Weight a = box[pick(rng)], b = box[pick(rng)], c = box[pick(rng)];
      CAPTURE(str(a));
      CAPTURE(str(b));
      CAPTURE(str(c));
      auto ab = tensorDecompose(rs, a, b);
      CHECK(ab == tensorDecompose(rs, b, a));
      CHECK(totalDimension(ab) == weylDimension(rs, a).get_si() * weylDimension(rs, b).get_si());
      auto triple = [&](const FormalCharacter& left, const Weight& right) {
        FormalCharacter out(rs, Basis::Irreducible);
        for (const auto& [nu, m] : left.entries)
          for (const auto& [x, k] : tensorDecompose(rs, nu, right).entries) out.add(x, m * k);
        return out;
      };
      CHECK(triple(ab, c) == triple(tensorDecompose(rs, b, c), a));
    }
  }
}

TEST_CASE("restriction to equal-rank subgroups") {
  auto torus = parsePair("A1:T");
  auto r = restrictCharacter(torus, w({2}));
  CHECK(r.entries == std::map<Weight, long>{{w({-2}), 1}, {w({0}), 1}, {w({2}), 1}});

  auto u2 = parsePair("A2:A1xT1");
  auto v = restrictCharacter(u2, w({1, 0}));
  CHECK(v.entries.size() == 2);
  CHECK(totalDimension(v) == 3);
  CHECK(trivialMultiplicity(restrictCharacter(u2, w({0, 0}))) == 1);

  // summing H-weight multiplicities reproduces the G weights
  for (const char* spec : {"A2:A1xT1", "A2:T", "B2:A1xT1", "C2:levi=1", "A3:A2xT1", "A3:A1xA1xT1", "A2:A2"}) {
    auto pair = parsePair(spec);
    for (const auto& lambda : boxWeights(pair.g->rank(), 2)) {
      CAPTURE(spec);
      CAPTURE(str(lambda));
      auto dec = restrictCharacter(pair, lambda);
      auto back = toWeightBasis(dec);
      auto chi = irreducibleCharacter(pair.g, lambda);
      FormalCharacter mapped(pair.h, Basis::Weight);
      for (const auto& [x, m] : chi.entries) mapped.add(pair.mapToH(x), m);
      CHECK(back.entries == mapped.entries);
    }
  }
}

TEST_CASE("polarization predicate") {
  auto t1 = RootSystem::build(Family::Torus, 1);
  ConeSeries s;
  s.system = t1;
  s.polarizer = w({1});
  s.offset = 0;
  s.window = 3;
  for (long k : {1, 2, 3}) s.add(w({k}), 1);
  CHECK(isPolarized(s, w({1}), true).polarized);

  ConeSeries z = s;
  z.entries.clear();
  for (long k : {0, 1, 2}) z.add(w({k}), 1);
  auto rep = isPolarized(z, w({1}), true);
  CHECK_FALSE(rep.polarized);
  CHECK(rep.witness == w({0}));
  CHECK(isPolarized(z, w({1}), false).polarized);
  CHECK(isPolarized(z, w({2}), false).polarized);

  ConeSeries tiny = s;
  tiny.window = -1;
  tiny.entries.clear();
  try {
    isPolarized(tiny, w({1}), true);
    FAIL("expected WindowTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WindowTooSmall);
  }
  CHECK_THROWS_AS(isPolarized(s, w({-1}), true), Error);
}

TEST_CASE("strict polarization forces zero trivial multiplicity") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3), pos(-4, 6);
  auto t2 = RootSystem::build(Family::Torus, 2);
  for (int trial = 0; trial < 50; ++trial) {
    ConeSeries s;
    s.system = t2;
    s.polarizer = w({1, 2});
    s.window = 6;
    for (int k = 0; k < 6; ++k) {
      Weight x = w({pos(rng), pos(rng)});
      if (s.inWindow(x)) s.add(x, coef(rng));
    }
    if (isPolarized(s, s.polarizer, true).polarized) CHECK(s.at(t2->zero()) == 0);
  }
}

TEST_CASE("character text format") {
  auto a2 = RootSystem::build(Family::A, 2);
  auto chi = irreducibleCharacter(a2, w({1, 1}));
  auto text = formatCharacter(chi);
  auto back = std::get<FormalCharacter>(parseCharacterText(text, "mem"));
  CHECK(back == chi);

  auto u2 = parsePair("A2:A1xT1");
  auto dec = restrictCharacter(u2, w({1, 0}));
  auto dBack = std::get<FormalCharacter>(parseCharacterText(formatCharacter(dec), "mem"));
  CHECK(dBack == dec);
  CHECK(dBack.system->label() == u2.h->label());

  ConeSeries s;
  s.system = RootSystem::build(Family::Torus, 1);
  s.polarizer = w({1});
  s.offset = Rational(1, 2);
  s.window = 4;
  s.add(w({0}), 1);
  s.add(Weight{Rational(7, 2)}, -2);
  auto sBack = std::get<ConeSeries>(parseCharacterText(formatSeries(s), "mem"));
  CHECK(sBack.entries == s.entries);
  CHECK(*sBack.offset == Rational(1, 2));
  CHECK(sBack.window == 4);

  auto expectParseError = [](const std::string& text, const std::string& fragment) {
    try {
      parseCharacterText(text, "bad.chr");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expectParseError("A2 weight-basis\n1,0 1\n1,x 2\n", "bad.chr:3: field weight");
  expectParseError("A2 sideways\n", "bad.chr:1: field basis");
  expectParseError("Q7 weight-basis\n", "bad.chr:1: field label");
  expectParseError("A2 weight-basis\n1,0 1/2\n", "bad.chr:2: field multiplicity");
  expectParseError("T1 weight-basis polarizer=1 window=2\n5 1\n", "outside the window");
}

TEST_CASE("character cache") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("diracforge-cache-test-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  CharacterCache cache(dir);
  auto b2 = RootSystem::parse("B2");
  Weight lambda = w({2, 1});
  auto fresh = irreducibleCharacter(b2, lambda);
  cache.store(lambda, fresh);
  CHECK(cache.stats().entries == 1);

  auto loaded = cache.load(b2, lambda);
  REQUIRE(loaded.has_value());
  CHECK(*loaded == fresh);
  std::ifstream in(dir / CharacterCache::fileName("B2", lambda), std::ios::binary);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(bytes == CharacterCache::serialize("B2", lambda, *loaded));
  CHECK(bytes == CharacterCache::serialize("B2", lambda, fresh));
  CHECK_FALSE(cache.load(b2, w({1, 1})).has_value());

  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&cache, &b2, t] {
      for (long k = 0; k < 3; ++k) {
        Weight x{Rational(k), Rational(t % 2)};
        cache.store(x, irreducibleCharacter(b2, x));
        (void)cache.load(b2, x);
      }
    });
  for (auto& th : pool) th.join();
  CHECK(cache.stats().entries == 6);
  cache.clear();
  CHECK(cache.stats().entries == 0);
  CHECK_FALSE(fs::exists(dir));
}
