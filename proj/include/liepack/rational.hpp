#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "liepack/errors.hpp"

namespace liepack {

/// Exact rational number over int64. Always stored normalized: den > 0,
/// gcd(num, den) = 1. Desk-scale inputs keep magnitudes tiny, so no bignum.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0)
      throw DimensionMismatch("rational with zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Largest integer <= *this.
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0)
      --q;
    return q;
  }

  /// Fractional part in [0,1).
  Rational frac() const { return *this - Rational(floor()); }

  friend Rational operator+(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational &a, const Rational &b) {
    if (b.num_ == 0)
      throw DimensionMismatch("division by zero rational");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational &operator+=(const Rational &o) { return *this = *this + o; }
  Rational &operator-=(const Rational &o) { return *this = *this - o; }
  Rational &operator*=(const Rational &o) { return *this = *this * o; }
  Rational &operator/=(const Rational &o) { return *this = *this / o; }

  friend bool operator==(const Rational &, const Rational &) = default;
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string str() const {
    if (den_ == 1)
      return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p", "-p", "p/q".
  static Rational parse(std::string_view s) {
    if (s.empty())
      throw ParseError("empty rational");
    size_t slash = s.find('/');
    try {
      if (slash == std::string_view::npos)
        return Rational(std::stoll(std::string(s)));
      long long n = std::stoll(std::string(s.substr(0, slash)));
      long long d = std::stoll(std::string(s.substr(slash + 1)));
      return Rational(n, d);
    } catch (const std::logic_error &) {
      throw ParseError("bad rational '" + std::string(s) + "'");
    }
  }

private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0)
      den_ = 1;
  }

  long long num_ = 0;
  long long den_ = 1;
};

} // namespace liepack
