#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace diracforge {

using Rational = mpq_class;
using Integer = mpz_class;
using RVec = std::vector<Rational>;

/// "p/q", or "p" when the denominator is one.
std::string str(const Rational& q);
std::string str(const RVec& v);

/// Accepts "p", "-p", "p/q" and plain decimals such as "0.5".
/// Throws Error(ParseError) otherwise.
Rational parseRational(std::string_view text);

/// n/d in lowest terms (the raw gmp constructor does not reduce).
Rational frac(const Integer& n, const Integer& d);

bool isInteger(const Rational& q);
Integer floorOf(const Rational& q);
Integer ceilOf(const Rational& q);
long toLong(const Rational& q);  // requires an integer that fits

Rational dot(const RVec& a, const RVec& b);
RVec add(const RVec& a, const RVec& b);
RVec sub(const RVec& a, const RVec& b);
RVec scale(const Rational& s, const RVec& a);
bool isZeroVec(const RVec& a);

Integer lcmOfDenominators(const RVec& v);

}  // namespace diracforge
