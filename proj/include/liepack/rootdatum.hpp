#pragma once

#include <string>
#include <vector>

#include "liepack/expscalar.hpp"
#include "liepack/gaussian.hpp"

namespace liepack {

/// Element of a fixed Cartan, as exact coordinates in the diagonal basis of
/// the ambient gl(n).
using CartanVector = std::vector<Gaussian>;

inline CartanVector cartan_zero(size_t n) { return CartanVector(n); }

inline CartanVector operator+(const CartanVector &a, const CartanVector &b) {
  if (a.size() != b.size())
    throw DimensionMismatch("cartan vector sizes differ");
  CartanVector out(a.size());
  for (size_t k = 0; k < a.size(); ++k)
    out[k] = a[k] + b[k];
  return out;
}

inline CartanVector operator-(const CartanVector &a, const CartanVector &b) {
  if (a.size() != b.size())
    throw DimensionMismatch("cartan vector sizes differ");
  CartanVector out(a.size());
  for (size_t k = 0; k < a.size(); ++k)
    out[k] = a[k] - b[k];
  return out;
}

inline CartanVector operator*(const Gaussian &c, const CartanVector &v) {
  CartanVector out(v.size());
  for (size_t k = 0; k < v.size(); ++k)
    out[k] = c * v[k];
  return out;
}

inline bool is_zero(const CartanVector &v) {
  for (const Gaussian &x : v)
    if (!x.is_zero())
      return false;
  return true;
}

inline std::string cartan_str(const CartanVector &v) {
  std::string s = "diag(";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k)
      s += ",";
    s += v[k].str();
  }
  return s + ")";
}

/// Evaluates an integer weight against a Cartan vector: <alpha, lambda>.
inline Gaussian pairing(const std::vector<long long> &weight,
                        const CartanVector &v) {
  if (weight.size() != v.size())
    throw DimensionMismatch("pairing dimension mismatch");
  Gaussian acc;
  for (size_t k = 0; k < v.size(); ++k)
    acc += Gaussian(Rational(weight[k])) * v[k];
  return acc;
}

/// Permutation of coordinates, acting by (w.v)[w(i)] = v[i].
using Perm = std::vector<int>;

inline Perm perm_identity(size_t n) {
  Perm p(n);
  for (size_t k = 0; k < n; ++k)
    p[k] = static_cast<int>(k);
  return p;
}

inline bool perm_is_identity(const Perm &p) {
  for (size_t k = 0; k < p.size(); ++k)
    if (p[k] != static_cast<int>(k))
      return false;
  return true;
}

inline bool perm_is_involution(const Perm &p) {
  for (size_t k = 0; k < p.size(); ++k) {
    int pk = p[k];
    if (pk < 0 || pk >= static_cast<int>(p.size()) ||
        p[pk] != static_cast<int>(k))
      return false;
  }
  return true;
}

inline CartanVector perm_apply(const Perm &p, const CartanVector &v) {
  if (p.size() != v.size())
    throw DimensionMismatch("permutation size mismatch");
  CartanVector out(v.size());
  for (size_t k = 0; k < v.size(); ++k)
    out[p[k]] = v[k];
  return out;
}

inline std::vector<long long> perm_apply(const Perm &p,
                                         const std::vector<long long> &v) {
  std::vector<long long> out(v.size());
  for (size_t k = 0; k < v.size(); ++k)
    out[p[k]] = v[k];
  return out;
}

enum class GroupTag { GL, SL, PGL, Torus };

/// Based root datum for the groups this library supports: GL(n), SL(n),
/// PGL(n) and tori, all in gl(n) diagonal coordinates (roots e_i - e_j).
/// The tag carries the lattice data that the shared coordinates do not.
class BasedRootDatum {
public:
  BasedRootDatum(GroupTag tag, int n) : tag_(tag), n_(n) {
    if (n < 0)
      throw UnsupportedGroup("negative rank");
    if (tag != GroupTag::Torus)
      for (int k = 0; k + 1 < n; ++k) {
        std::vector<long long> r(n, 0);
        r[k] = 1;
        r[k + 1] = -1;
        simple_roots_.push_back(r);
        simple_coroots_.push_back(r);
      }
  }

  static BasedRootDatum gl(int n) { return BasedRootDatum(GroupTag::GL, n); }
  static BasedRootDatum sl(int n) { return BasedRootDatum(GroupTag::SL, n); }
  static BasedRootDatum pgl(int n) { return BasedRootDatum(GroupTag::PGL, n); }
  static BasedRootDatum torus(int n) {
    return BasedRootDatum(GroupTag::Torus, n);
  }

  static BasedRootDatum from_name(const std::string &name) {
    if (name.size() >= 3 && name.substr(0, 2) == "gl")
      return gl(std::stoi(name.substr(2)));
    if (name.size() >= 3 && name.substr(0, 2) == "sl")
      return sl(std::stoi(name.substr(2)));
    if (name.size() >= 4 && name.substr(0, 3) == "pgl")
      return pgl(std::stoi(name.substr(3)));
    throw UnsupportedGroup("unknown group '" + name + "'");
  }

  GroupTag tag() const { return tag_; }
  int dim() const { return n_; }
  int rank() const { return static_cast<int>(simple_roots_.size()); }

  std::string name() const {
    switch (tag_) {
    case GroupTag::GL:
      return "gl" + std::to_string(n_);
    case GroupTag::SL:
      return "sl" + std::to_string(n_);
    case GroupTag::PGL:
      return "pgl" + std::to_string(n_);
    case GroupTag::Torus:
      return "torus" + std::to_string(n_);
    }
    return "?";
  }

  const std::vector<std::vector<long long>> &simple_roots() const {
    return simple_roots_;
  }
  const std::vector<std::vector<long long>> &simple_coroots() const {
    return simple_coroots_;
  }

  /// <alpha_i, alpha_j-vee>.
  std::vector<std::vector<long long>> cartan_matrix() const {
    std::vector<std::vector<long long>> m(rank(),
                                          std::vector<long long>(rank(), 0));
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        for (int k = 0; k < n_; ++k)
          m[i][j] += simple_roots_[i][k] * simple_coroots_[j][k];
    return m;
  }

  /// Swaps roots with coroots and character with cocharacter lattices.
  BasedRootDatum dual() const {
    switch (tag_) {
    case GroupTag::GL:
      return gl(n_);
    case GroupTag::SL:
      return pgl(n_);
    case GroupTag::PGL:
      return sl(n_);
    case GroupTag::Torus:
      return torus(n_);
    }
    throw UnsupportedGroup("bad tag");
  }

  /// All roots e_i - e_j, i != j (upper pairs first).
  std::vector<std::vector<long long>> all_roots() const {
    std::vector<std::vector<long long>> out;
    if (tag_ == GroupTag::Torus)
      return out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j) {
          std::vector<long long> r(n_, 0);
          r[i] = 1;
          r[j] = -1;
          out.push_back(r);
        }
    return out;
  }

  /// True iff exp(2*pi*i*v) is the identity in this group's maximal torus.
  bool exponent_is_trivial(const CartanVector &v) const {
    if (static_cast<int>(v.size()) != n_)
      throw DimensionMismatch("cartan vector size mismatch");
    if (tag_ == GroupTag::PGL) {
      // Coordinates matter only modulo a common shift.
      for (const Gaussian &x : v) {
        Gaussian d = x - v[0];
        if (!d.is_real() || !d.re().is_integer())
          return false;
      }
      return true;
    }
    for (const Gaussian &x : v)
      if (!x.is_real() || !x.re().is_integer())
        return false;
    if (tag_ == GroupTag::SL) {
      // The vector must also lie in the SL Cartan; callers pass trace-zero
      // vectors, so nothing extra to check beyond integrality.
    }
    return true;
  }

  /// Membership of v in the Cartan subalgebra (trace zero for SL).
  bool in_cartan(const CartanVector &v) const {
    if (static_cast<int>(v.size()) != n_)
      return false;
    if (tag_ == GroupTag::SL) {
      Gaussian tr;
      for (const Gaussian &x : v)
        tr += x;
      return tr.is_zero();
    }
    return true;
  }

  /// Basis of the cocharacter lattice of the maximal torus.
  std::vector<std::vector<long long>> cocharacter_basis() const {
    std::vector<std::vector<long long>> out;
    switch (tag_) {
    case GroupTag::GL:
    case GroupTag::Torus:
      for (int k = 0; k < n_; ++k) {
        std::vector<long long> e(n_, 0);
        e[k] = 1;
        out.push_back(e);
      }
      break;
    case GroupTag::SL:
      out = simple_coroots_;
      break;
    case GroupTag::PGL:
      // Coweight lattice of the adjoint torus: e_1,...,e_{n-1} modulo the
      // common shift (e_n is a combination of these and (1,...,1)).
      for (int k = 0; k + 1 < n_; ++k) {
        std::vector<long long> e(n_, 0);
        e[k] = 1;
        out.push_back(e);
      }
      break;
    }
    return out;
  }

  friend bool operator==(const BasedRootDatum &, const BasedRootDatum &) =
      default;

private:
  GroupTag tag_;
  int n_;
  std::vector<std::vector<long long>> simple_roots_;
  std::vector<std::vector<long long>> simple_coroots_;
};

/// rho = half sum of positive roots, in gl(n) coordinates (trace zero).
inline CartanVector rho_vector(int n) {
  CartanVector v(n);
  for (int k = 0; k < n; ++k)
    v[k] = Gaussian(Rational(n - 1 - 2 * k, 2));
  return v;
}

} // namespace liepack
