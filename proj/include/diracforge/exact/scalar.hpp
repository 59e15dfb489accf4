#pragma once

#include "diracforge/exact/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace diracforge {

/// a + b i with exact rational parts.
struct Gaussian {
  Rational re = 0;
  Rational im = 0;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long r) : re(r) {}

  bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }
  Gaussian conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  Gaussian inverse() const;

  Gaussian operator-() const { return {-re, -im}; }
  Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
  Gaussian& operator*=(const Gaussian& o);
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

std::string str(const Gaussian& z);

/// Element of the field Q(i)(sqrt 2, sqrt 3, sqrt 5, ...): a finite sum of
/// Gaussian coefficients times square roots of distinct squarefree positive
/// integers. The representation is canonical, so equality is structural.
///
/// Orthonormal bases of compact Lie algebras and of irreducible modules need
/// square roots of rationals; this field is the smallest convenient carrier that
/// keeps every entry exact.
class Scalar {
 public:
  using Term = std::pair<std::uint64_t, Gaussian>;  // (radicand, coefficient)

  Scalar() = default;
  Scalar(long v) : Scalar(Gaussian(v)) {}
  Scalar(const Rational& v) : Scalar(Gaussian(v)) {}
  Scalar(const Gaussian& v);

  static Scalar i();
  /// Principal square root of a rational; negative input gives i*sqrt(-q).
  static Scalar sqrt(const Rational& q);

  bool isZero() const { return terms_.empty(); }
  bool isRational() const;
  bool isGaussian() const;
  Rational toRational() const;  // requires isRational()
  Gaussian toGaussian() const;  // requires isGaussian()
  const std::vector<Term>& terms() const { return terms_; }

  Scalar conj() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;  // sorted by radicand, coefficients nonzero
};

std::string str(const Scalar& s);

inline bool isZero(const Rational& q) { return sgn(q) == 0; }
inline bool isZero(const Scalar& s) { return s.isZero(); }
inline Rational conjugate(const Rational& q) { return q; }
inline Scalar conjugate(const Scalar& s) { return s.conj(); }
inline Rational inverseOf(const Rational& q) { return 1 / q; }
inline Scalar inverseOf(const Scalar& s) { return s.inverse(); }

}  // namespace diracforge
