#pragma once

#include <string>

#include "liepack/gaussian.hpp"

namespace liepack {

/// A monomial scalar q * exp(2*pi*i*c) with q, c Gaussian rational.
/// Normal form: Re(c) lies in [0,1); if Re(c) is a quarter integer it is
/// folded into the coefficient as a power of i (so exp(2pi*i*(1/4)) becomes
/// the coefficient i). Equality on normal forms is exact, which is what makes
/// the y^2 = exp(2*pi*i*lambda) checks decidable.
class ExpScalar {
public:
  ExpScalar() : coef_(1) {}
  explicit ExpScalar(Gaussian coef) : coef_(coef) {}
  ExpScalar(Gaussian coef, Gaussian exponent) : coef_(coef), expo_(exponent) {
    normalize();
  }

  /// exp(2*pi*i*c).
  static ExpScalar from_exponent(const Gaussian &c) {
    return ExpScalar(Gaussian(1), c);
  }
  static ExpScalar one() { return ExpScalar(); }

  const Gaussian &coef() const { return coef_; }
  const Gaussian &exponent() const { return expo_; }

  bool is_zero() const { return coef_.is_zero(); }
  bool is_one() const { return coef_ == Gaussian(1) && expo_.is_zero(); }

  friend ExpScalar operator*(const ExpScalar &a, const ExpScalar &b) {
    return ExpScalar(a.coef_ * b.coef_, a.expo_ + b.expo_);
  }
  ExpScalar &operator*=(const ExpScalar &o) { return *this = *this * o; }

  ExpScalar inverse() const {
    if (is_zero())
      throw DimensionMismatch("inverse of zero ExpScalar");
    return ExpScalar(Gaussian(1) / coef_, -expo_);
  }

  friend bool operator==(const ExpScalar &, const ExpScalar &) = default;

  std::string str() const {
    if (expo_.is_zero())
      return coef_.str();
    std::string e = "exp(2pi i " + expo_.str() + ")";
    if (coef_ == Gaussian(1))
      return e;
    if (coef_ == Gaussian(-1))
      return "-" + e;
    return coef_.str() + "*" + e;
  }

private:
  void normalize() {
    if (coef_.is_zero()) {
      expo_ = Gaussian();
      return;
    }
    Rational r = expo_.re().frac();
    // Quarter-integer part folds into the coefficient as a power of i.
    if (Rational(4) * r == Rational((Rational(4) * r).floor())) {
      long long k = (Rational(4) * r).floor() % 4;
      static const Gaussian pow_i[4] = {Gaussian(1), Gaussian::i(),
                                        Gaussian(-1), -Gaussian::i()};
      coef_ = coef_ * pow_i[k];
      r = Rational(0);
    }
    expo_ = Gaussian(r, expo_.im());
  }

  Gaussian coef_;
  Gaussian expo_;
};

} // namespace liepack
