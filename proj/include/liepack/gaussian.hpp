#pragma once

#include <string>
#include <string_view>

#include "liepack/rational.hpp"

namespace liepack {

/// Gaussian rational a + bi with exact components. Rendered as "1/2+3/4i";
/// the pure-imaginary units render as "i" / "-i".
class Gaussian {
public:
  constexpr Gaussian() = default;
  Gaussian(Rational re) : re_(re) {}
  Gaussian(long long re) : re_(re) {}
  Gaussian(Rational re, Rational im) : re_(re), im_(im) {}

  static Gaussian i() { return Gaussian(0, 1); }

  const Rational &re() const { return re_; }
  const Rational &im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  friend Gaussian operator+(const Gaussian &a, const Gaussian &b) {
    return Gaussian(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Gaussian operator-(const Gaussian &a, const Gaussian &b) {
    return Gaussian(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Gaussian operator*(const Gaussian &a, const Gaussian &b) {
    return Gaussian(a.re_ * b.re_ - a.im_ * b.im_,
                    a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Gaussian operator/(const Gaussian &a, const Gaussian &b) {
    if (b.is_zero())
      throw DimensionMismatch("division by zero gaussian rational");
    Rational n = b.norm();
    Gaussian p = a * b.conj();
    return Gaussian(p.re_ / n, p.im_ / n);
  }
  Gaussian operator-() const { return Gaussian(-re_, -im_); }
  Gaussian &operator+=(const Gaussian &o) { return *this = *this + o; }
  Gaussian &operator-=(const Gaussian &o) { return *this = *this - o; }
  Gaussian &operator*=(const Gaussian &o) { return *this = *this * o; }

  friend bool operator==(const Gaussian &, const Gaussian &) = default;

  /// Lexicographic (re, im); gives descriptors a canonical order.
  friend bool operator<(const Gaussian &a, const Gaussian &b) {
    if (a.re_ != b.re_)
      return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  std::string str() const {
    if (im_.is_zero())
      return re_.str();
    std::string im_part;
    if (im_ == Rational(1))
      im_part = "i";
    else if (im_ == Rational(-1))
      im_part = "-i";
    else
      im_part = im_.str() + "i";
    if (re_.is_zero())
      return im_part;
    if (im_ > Rational(0))
      return re_.str() + "+" + im_part;
    return re_.str() + im_part;
  }

  /// Parses the output of str(): "0", "-3/2", "i", "2i", "1/2+3/4i", "1-i".
  static Gaussian parse(std::string_view s) {
    if (s.empty())
      throw ParseError("empty gaussian rational");
    // Split at a '+' or '-' that is not the leading sign.
    size_t split = std::string_view::npos;
    for (size_t k = 1; k < s.size(); ++k)
      if (s[k] == '+' || s[k] == '-')
        split = k;
    auto parse_imag = [](std::string_view t) {
      // t ends with 'i'; the coefficient may be empty or a bare sign.
      t.remove_suffix(1);
      if (t.empty())
        return Rational(1);
      if (t == "-")
        return Rational(-1);
      return Rational::parse(t);
    };
    if (s.back() == 'i') {
      if (split == std::string_view::npos)
        return Gaussian(0, parse_imag(s));
      std::string_view head = s.substr(0, split);
      std::string_view tail = s.substr(split);
      if (tail.front() == '+')
        tail.remove_prefix(1);
      return Gaussian(Rational::parse(head), parse_imag(tail));
    }
    return Gaussian(Rational::parse(s));
  }

private:
  Rational re_;
  Rational im_;
};

} // namespace liepack
