#include "chromabound/rational.hpp"

#include <limits>
#include <numeric>

namespace chromabound {

namespace {

__extension__ using Wide = __int128;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("rational multiplication overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("rational addition overflow");
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (num == std::numeric_limits<std::int64_t>::min() ||
      den == std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("rational component out of range");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational& Rational::operator+=(const Rational& rhs) {
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b/g*d)
  const std::int64_t g = std::gcd(den_, rhs.den_);
  const std::int64_t num = checked_add(checked_mul(num_, rhs.den_ / g), checked_mul(rhs.num_, den_ / g));
  const std::int64_t den = checked_mul(den_ / g, rhs.den_);
  *this = Rational(num, den);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  const std::int64_t g1 = std::gcd(num_, rhs.den_);
  const std::int64_t g2 = std::gcd(rhs.num_, den_);
  *this = Rational(checked_mul(num_ / g1, rhs.num_ / g2), checked_mul(den_ / g2, rhs.den_ / g1));
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  return *this *= Rational(rhs.den_, rhs.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace chromabound
