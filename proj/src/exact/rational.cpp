#include "diracforge/exact/rational.hpp"

#include "diracforge/errors.hpp"

#include <cctype>

namespace diracforge {

std::string str(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational frac(const Integer& n, const Integer& d) {
  require(d != 0, ErrorKind::InvariantViolated, "zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string str(const RVec& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += str(v[i]);
  }
  return out + "]";
}

namespace {

bool allDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!allDigits(num) || !allDigits(den))
      fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) fail(ErrorKind::ParseError, "zero denominator: '" + std::string(text) + "'");
    out = frac(Integer(std::string(num)), d);
  } else if (auto dotPos = body.find('.'); dotPos != std::string_view::npos) {
    auto whole = body.substr(0, dotPos), fraction = body.substr(dotPos + 1);
    if ((!whole.empty() && !allDigits(whole)) || !allDigits(fraction))
      fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    Integer scale = 1;
    for (size_t i = 0; i < fraction.size(); ++i) scale *= 10;
    Integer num(std::string(whole.empty() ? "0" : whole));
    num = num * scale + Integer(std::string(fraction));
    out = frac(num, scale);
  } else {
    if (!allDigits(body))
      fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    out = Rational(Integer(std::string(body)));
  }
  return negative ? Rational(-out) : out;
}

bool isInteger(const Rational& q) { return q.get_den() == 1; }

Integer floorOf(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceilOf(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

long toLong(const Rational& q) {
  require(isInteger(q) && q.get_num().fits_slong_p(), ErrorKind::NotIntegral,
          "expected a machine integer, got " + str(q));
  return q.get_num().get_si();
}

Rational dot(const RVec& a, const RVec& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "dot of unequal lengths");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RVec add(const RVec& a, const RVec& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "add of unequal lengths");
  RVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RVec sub(const RVec& a, const RVec& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "sub of unequal lengths");
  RVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RVec scale(const Rational& s, const RVec& a) {
  RVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

bool isZeroVec(const RVec& a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

Integer lcmOfDenominators(const RVec& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

}  // namespace diracforge
