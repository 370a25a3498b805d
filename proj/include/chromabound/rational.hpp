#ifndef CHROMABOUND_RATIONAL_HPP
#define CHROMABOUND_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace chromabound {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Exact fraction over int64 in lowest terms with a positive denominator.
/// Every operation that would overflow throws OverflowError instead of
/// wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  long double to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace chromabound

#endif  // CHROMABOUND_RATIONAL_HPP
