#pragma once

#include <string>
#include <vector>

#include "liepack/rootdatum.hpp"

namespace liepack {

/// Finite abelian group given by its elementary divisors; empty = trivial.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<int> divisors)
      : divisors_(std::move(divisors)) {
    for (int d : divisors_)
      if (d < 2)
        throw InvalidParameter("elementary divisors must be >= 2");
  }

  static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(); }
  static FiniteAbelianGroup z2() { return FiniteAbelianGroup({2}); }

  const std::vector<int> &divisors() const { return divisors_; }
  int order() const {
    int o = 1;
    for (int d : divisors_)
      o *= d;
    return o;
  }
  bool is_trivial() const { return divisors_.empty(); }

  friend bool operator==(const FiniteAbelianGroup &,
                         const FiniteAbelianGroup &) = default;

  std::string str() const {
    if (divisors_.empty())
      return "1";
    std::string s;
    for (size_t k = 0; k < divisors_.size(); ++k) {
      if (k)
        s += " x ";
      s += "Z/" + std::to_string(divisors_[k]);
    }
    return s;
  }

private:
  std::vector<int> divisors_;
};

/// Element y = n_w * exp(2*pi*i*v) * delta of the non-identity component of a
/// product L-group. n_w is the Tits representative of the Weyl involution w.
struct ExtendedElement {
  Perm weyl;
  CartanVector torus_exponent;
  bool gamma_flag = true;
};

/// A Langlands parameter in torus-aligned (y, lambda) form, attached to the
/// dual group in which y and lambda live.
struct LanglandsParameter {
  BasedRootDatum group; // the dual group G-vee
  ExtendedElement y;
  CartanVector lambda;
};

struct CompleteLanglandsParameter {
  LanglandsParameter param;
  int tau = 0; // character index into the dual of the component group
};

/// One row of the packet fixture tables: a real form tag plus the textual
/// description the tables use, with the shared infinitesimal character.
struct PacketLabel {
  std::string real_form; // "split" | "compact"
  std::string description;
  CartanVector infl_char;
};

/// Exponent vector sq with n_w^2 = exp(2*pi*i*sq), read off the Tits
/// representatives: each 2-cycle (i j) of w contributes -1 at slots i and j.
inline CartanVector tits_square_exponent(const Perm &w) {
  CartanVector sq(w.size());
  for (size_t k = 0; k < w.size(); ++k)
    if (w[k] != static_cast<int>(k))
      sq[k] = Gaussian(Rational(1, 2));
  return sq;
}

/// Checks y^2 = exp(2*pi*i*lambda) in the given dual group and returns the
/// validated parameter. y^2 = n_w^2 * exp(2*pi*i*(v + w.v)).
inline LanglandsParameter validate_parameter(const BasedRootDatum &dual_group,
                                             const ExtendedElement &y,
                                             const CartanVector &lambda) {
  if (!y.gamma_flag)
    throw NotInNonIdentityComponent("y must lie in the non-identity component");
  if (!perm_is_involution(y.weyl))
    throw InvalidParameter("weyl part must be an involution");
  if (!dual_group.in_cartan(lambda))
    throw InvalidParameter("lambda not in the Cartan of " + dual_group.name());
  CartanVector square = tits_square_exponent(y.weyl) + y.torus_exponent +
                        perm_apply(y.weyl, y.torus_exponent);
  if (!dual_group.exponent_is_trivial(square - lambda))
    throw SquareMismatch("y^2 != exp(2 pi i lambda)");
  return LanglandsParameter{dual_group, y, lambda};
}

/// Condition (iii) of the packet-property list: lambda + Ad(y)lambda lies in
/// the purely imaginary span of the cocharacter lattice.
inline bool is_tempered(const LanglandsParameter &p) {
  CartanVector s = p.lambda + perm_apply(p.y.weyl, p.lambda);
  for (const Gaussian &x : s)
    if (!x.re().is_zero())
      return false;
  return true;
}

/// Ad(y) acts by inversion on the dual torus.
inline bool is_discrete_series_packet(const LanglandsParameter &p) {
  for (const std::vector<long long> &b : p.group.cocharacter_basis()) {
    std::vector<long long> wb = perm_apply(p.y.weyl, b);
    for (size_t k = 0; k < b.size(); ++k)
      if (wb[k] != -b[k])
        return false;
  }
  return true;
}

/// Component group of Z_{G-vee}(y, lambda), by case analysis over the
/// supported groups: centralizers are connected except for the SL(2)
/// antidiagonal class, where the centralizer is {+-Id}.
inline FiniteAbelianGroup component_group(const LanglandsParameter &p) {
  const BasedRootDatum &g = p.group;
  if (g.rank() == 0)
    return FiniteAbelianGroup::trivial();
  if (g.tag() == GroupTag::SL && g.dim() == 2)
    return perm_is_identity(p.y.weyl) ? FiniteAbelianGroup::trivial()
                                      : FiniteAbelianGroup::z2();
  if (g.tag() == GroupTag::GL)
    return FiniteAbelianGroup::trivial(); // centralizers in GL(n) are connected
  throw UnsupportedGroup("component groups implemented for rank-1 and GL(n)");
}

/// Display name of the full centralizer Z_{G-vee}(y, lambda) in the SL(2)
/// cases (the tables' last column).
inline std::string centralizer_label(const LanglandsParameter &p) {
  if (!(p.group.tag() == GroupTag::SL && p.group.dim() == 2))
    throw UnsupportedGroup("centralizer labels only for the PGL(2) class");
  if (!perm_is_identity(p.y.weyl))
    return "{+-Id}";
  if (is_zero(p.lambda)) {
    // y is then +-Id, central, so the centralizer is all of G-vee.
    return "G^v";
  }
  return "H^v";
}

inline bool is_half_integer_ge_half(const Gaussian &a) {
  if (!a.is_real())
    return false;
  Rational t = a.re() - Rational(1, 2);
  return t.is_integer() && t >= Rational(0);
}

/// All G-vee-conjugacy classes of parameters with lambda = diag(a,-a) for the
/// PGL(2) inner class, in the tables' row order: the two diagonal classes
/// (spherical first), then the antidiagonal class when a is in 1/2 + Z>=0.
inline std::vector<LanglandsParameter>
enumerate_parameters(const BasedRootDatum &group, const Gaussian &a) {
  if (!(group.tag() == GroupTag::PGL && group.dim() == 2))
    throw UnsupportedGroup("enumeration implemented for the PGL(2) class");
  bool re_ok = a.re() > Rational(0) ||
               (a.re().is_zero() && a.im() >= Rational(0));
  if (!re_ok)
    throw NormalizationViolated("require Re(a) >= 0, and Im(a) >= 0 if Re(a)=0");
  BasedRootDatum dual = group.dual();
  CartanVector lambda{a, -a};
  Perm id = perm_identity(2);
  std::vector<LanglandsParameter> out;
  // For half-integral a the two diagonal square roots of exp(2 pi i lambda)
  // are +-diag(i,-i); the tables pin diag(i,-i) to the spherical row for
  // every such a, so we use the fixed exponent (1/4,-1/4) rather than
  // lambda/2.
  CartanVector v1 = is_half_integer_ge_half(a)
                        ? CartanVector{Gaussian(Rational(1, 4)),
                                       Gaussian(Rational(-1, 4))}
                        : Gaussian(Rational(1, 2)) * lambda;
  CartanVector shift{Gaussian(Rational(1, 2)), Gaussian(Rational(-1, 2))};
  out.push_back(validate_parameter(dual, ExtendedElement{id, v1, true}, lambda));
  out.push_back(
      validate_parameter(dual, ExtendedElement{id, v1 + shift, true}, lambda));
  if (is_half_integer_ge_half(a)) {
    Perm s{1, 0};
    out.push_back(validate_parameter(
        dual, ExtendedElement{s, cartan_zero(2), true}, lambda));
  }
  return out;
}

/// The L-packet rows of the fixture tables for the PGL(2) inner class: one
/// label per real form whose column is non-empty.
inline std::vector<PacketLabel>
packet_labels(const CompleteLanglandsParameter &c) {
  const LanglandsParameter &p = c.param;
  if (!(p.group.tag() == GroupTag::SL && p.group.dim() == 2))
    throw UnsupportedGroup("packet labels only for the PGL(2) class");
  if (c.tau < 0 || c.tau >= component_group(p).order())
    throw InvalidParameter("tau out of range for the component group");
  Gaussian a = p.lambda[0];
  auto astr = a.str();
  std::vector<PacketLabel> out;
  if (!perm_is_identity(p.y.weyl)) {
    std::string dim = (a.re() + Rational(1, 2)).str();
    out.push_back({"split", "discrete series of infinitesimal character " +
                                astr,
                   p.lambda});
    out.push_back(
        {"compact", "finite-dimensional of dimension " + dim, p.lambda});
    return out;
  }
  // Diagonal y: spherical iff the torus part is exp(pi i a) (equivalently
  // diag(i,-i) in the half-integral rows).
  CartanVector ref = is_half_integer_ge_half(a)
                         ? CartanVector{Gaussian(Rational(1, 4)),
                                        Gaussian(Rational(-1, 4))}
                         : Gaussian(Rational(1, 2)) * p.lambda;
  bool spherical =
      p.group.exponent_is_trivial(p.y.torus_exponent - ref);
  if (is_half_integer_ge_half(a)) {
    std::string dim = (a.re() + Rational(1, 2)).str();
    out.push_back({"split", std::string(spherical ? "spherical" : "non-spherical") +
                                " finite-dimensional of dimension " + dim,
                   p.lambda});
  } else {
    out.push_back({"split", std::string(spherical ? "spherical" : "non-spherical") +
                                " principal series of infinitesimal character " +
                                astr,
                   p.lambda});
  }
  return out;
}

/// Rendering of y as a 2x2 matrix with the Galois marker.
inline std::string y_str(const LanglandsParameter &p) {
  const ExtendedElement &y = p.y;
  if (perm_is_identity(y.weyl)) {
    std::string s = "diag(";
    for (size_t k = 0; k < y.torus_exponent.size(); ++k) {
      if (k)
        s += ",";
      s += ExpScalar::from_exponent(y.torus_exponent[k]).str();
    }
    return s + ").delta";
  }
  // Antidiagonal: n_s * diag(e1,e2) = [[0,e2],[-e1,0]].
  ExpScalar e1 = ExpScalar::from_exponent(y.torus_exponent[0]);
  ExpScalar e2 = ExpScalar::from_exponent(y.torus_exponent[1]);
  ExpScalar minus_e1 = ExpScalar(Gaussian(-1)) * e1;
  return "antidiag(" + e2.str() + "," + minus_e1.str() + ").delta";
}

} // namespace liepack
