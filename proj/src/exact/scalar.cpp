#include "diracforge/exact/scalar.hpp"

#include "diracforge/errors.hpp"

#include <algorithm>
#include <numeric>

namespace diracforge {

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Gaussian Gaussian::inverse() const {
  require(!isZero(), ErrorKind::InvariantViolated, "division by zero");
  Rational n = norm();
  return {re / n, -im / n};
}

std::string str(const Gaussian& z) {
  if (sgn(z.im) == 0) return str(z.re);
  std::string imPart = z.im == 1 ? "i" : z.im == -1 ? "-i" : str(z.im) + "i";
  if (sgn(z.re) == 0) return imPart;
  return str(z.re) + (sgn(z.im) > 0 ? "+" : "") + imPart;
}

Scalar::Scalar(const Gaussian& v) {
  if (!v.isZero()) terms_.emplace_back(1, v);
}

Scalar Scalar::i() { return Scalar(Gaussian(0, 1)); }

namespace {

// Splits n = s^2 * r with r squarefree.
std::pair<Integer, Integer> squarefreeSplit(Integer n) {
  Integer square = 1, rest = 1;
  for (unsigned long p = 2; Integer(p) * p <= n; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square *= p;
    if (e % 2) rest *= p;
  }
  rest *= n;
  return {square, rest};
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

Scalar Scalar::sqrt(const Rational& q) {
  if (sgn(q) == 0) return {};
  if (sgn(q) < 0) return i() * sqrt(Rational(-q));
  // sqrt(a/b) = sqrt(a*b)/b
  Integer ab = q.get_num() * q.get_den();
  auto [square, radicand] = squarefreeSplit(ab);
  require(radicand.fits_ulong_p(), ErrorKind::TooLarge, "radicand out of range");
  Scalar out;
  out.terms_.emplace_back(radicand.get_ui(), Gaussian(frac(square, q.get_den())));
  return out;
}

bool Scalar::isRational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1 && sgn(terms_[0].second.im) == 0);
}

bool Scalar::isGaussian() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1);
}

Rational Scalar::toRational() const {
  require(isRational(), ErrorKind::InvariantViolated, "scalar is not rational: " + str(*this));
  return terms_.empty() ? Rational(0) : terms_[0].second.re;
}

Gaussian Scalar::toGaussian() const {
  require(isGaussian(), ErrorKind::InvariantViolated, "scalar is not Gaussian: " + str(*this));
  return terms_.empty() ? Gaussian() : terms_[0].second;
}

Scalar Scalar::conj() const {
  Scalar out = *this;
  for (auto& t : out.terms_) t.second.im = -t.second.im;
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  size_t a = 0, b = 0;
  while (a < terms_.size() || b < o.terms_.size()) {
    if (b == o.terms_.size() || (a < terms_.size() && terms_[a].first < o.terms_[b].first)) {
      merged.push_back(std::move(terms_[a++]));
    } else if (a == terms_.size() || o.terms_[b].first < terms_[a].first) {
      merged.push_back(o.terms_[b++]);
    } else {
      Gaussian c = terms_[a].second + o.terms_[b].second;
      if (!c.isZero()) merged.emplace_back(terms_[a].first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& x, const Scalar& y) {
  Scalar out;
  if (x.isZero() || y.isZero()) return out;
  if (x.terms_.size() == 1 && y.terms_.size() == 1 && x.terms_[0].first == 1) {
    out.terms_ = y.terms_;
    for (auto& t : out.terms_) t.second = x.terms_[0].second * t.second;
    return out;
  }
  std::vector<Scalar::Term> raw;
  for (const auto& [ra, ca] : x.terms_) {
    for (const auto& [rb, cb] : y.terms_) {
      // sqrt(ra) sqrt(rb) = g sqrt(ra rb / g^2), g = gcd(ra, rb)
      std::uint64_t g = gcd64(ra, rb);
      Gaussian c = ca * cb;
      if (g != 1) c *= Gaussian(Rational(static_cast<unsigned long>(g)));
      raw.emplace_back((ra / g) * (rb / g), std::move(c));
    }
  }
  std::sort(raw.begin(), raw.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  for (auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second.isZero()) out.terms_.pop_back();
    } else if (!t.second.isZero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

namespace {

std::uint64_t largestPrimeFactor(std::uint64_t n) {
  std::uint64_t best = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      best = p;
      n /= p;
    }
  return n > 1 ? std::max(best, n) : best;
}

}  // namespace

// x = a + b sqrt(p) for the largest prime p present; x (a - b sqrt(p)) = a^2 - p b^2
// no longer involves sqrt(p), so recursion terminates at a Gaussian.
Scalar Scalar::inverse() const {
  require(!isZero(), ErrorKind::InvariantViolated, "division by zero");
  if (isGaussian()) return Scalar(terms_[0].second.inverse());
  std::uint64_t p = 1;
  for (const auto& t : terms_) p = std::max(p, largestPrimeFactor(t.first));
  Scalar a, b;
  for (const auto& t : terms_) {
    if (t.first % p == 0)
      b.terms_.emplace_back(t.first / p, t.second);
    else
      a.terms_.push_back(t);
  }
  std::sort(b.terms_.begin(), b.terms_.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
  Scalar sqrtP = Scalar::sqrt(Rational(static_cast<unsigned long>(p)));
  Scalar conjugateFactor = a - b * sqrtP;
  Scalar reduced = a * a - Scalar(Rational(static_cast<unsigned long>(p))) * b * b;
  return conjugateFactor * reduced.inverse();
}

std::string str(const Scalar& s) {
  if (s.isZero()) return "0";
  std::string out;
  for (const auto& [r, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    if (r == 1) {
      out += str(c);
    } else {
      out += "(" + str(c) + ")*sqrt(" + std::to_string(r) + ")";
    }
  }
  return out;
}

}  // namespace diracforge
