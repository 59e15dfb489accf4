#include "doctest.h"

#include "diracforge/exact/matrix.hpp"

#include <random>

using namespace diracforge;

TEST_CASE("rational parsing and printing") {
  CHECK(parseRational("3/6") == Rational(1, 2));
  CHECK(parseRational("-4") == Rational(-4));
  CHECK(parseRational("0.25") == Rational(1, 4));
  CHECK(str(Rational(-2, 4)) == "-1/2");
  CHECK(str(Rational(5)) == "5");
  CHECK_THROWS_AS(parseRational("1/0"), Error);
  CHECK_THROWS_AS(parseRational("x"), Error);
  CHECK(floorOf(Rational(-3, 2)) == -2);
  CHECK(ceilOf(Rational(-3, 2)) == -1);
}

TEST_CASE("square roots multiply back to rationals") {
  Scalar s2 = Scalar::sqrt(2), s3 = Scalar::sqrt(3), s6 = Scalar::sqrt(6);
  CHECK(s2 * s2 == Scalar(2));
  CHECK(s2 * s3 == s6);
  CHECK(Scalar::sqrt(Rational(3, 2)) * Scalar::sqrt(Rational(2, 3)) == Scalar(1));
  CHECK(Scalar::sqrt(8) == Scalar(2) * s2);
  CHECK(Scalar::sqrt(-1) == Scalar::i());
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK((s2 + s3).conj() == s2 + s3);
  CHECK((Scalar::i() * s2).conj() == -(Scalar::i() * s2));
}

TEST_CASE("field inverse is exact") {
  std::vector<Scalar> samples = {
      Scalar(1) + Scalar::sqrt(2),
      Scalar::sqrt(2) + Scalar::sqrt(3),
      Scalar::i() + Scalar::sqrt(6) + Scalar(Rational(1, 3)) * Scalar::sqrt(5),
      Scalar(Gaussian(2, -7)),
  };
  for (const auto& x : samples) CHECK(x * x.inverse() == Scalar(1));
}

TEST_CASE("nullspace and solve over rationals") {
  RMatrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  auto ns = nullspace(m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns)
    for (const auto& x : m.apply(v)) CHECK(sgn(x) == 0);
  CHECK(rankOf(m) == 1);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  RMatrix a(4, 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) a(i, j) = d(rng);
  for (size_t i = 0; i < 4; ++i) a(i, i) += 20;
  CHECK(a * inverse(a) == RMatrix::identity(4));
}

TEST_CASE("kron and adjoint") {
  SMatrix a(2, 2), b(2, 2);
  a(0, 1) = Scalar::i();
  b(1, 0) = Scalar::sqrt(2);
  SMatrix k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k(1, 2) == Scalar::i() * Scalar::sqrt(2));
  CHECK(k.adjoint()(2, 1) == -(Scalar::i() * Scalar::sqrt(2)));
  CHECK((kron(a, b) * kron(b, a)) == kron(SMatrix(a * b), SMatrix(b * a)));
  CHECK(SMatrix::identity(3).scalarValue().value() == Scalar(1));
}
