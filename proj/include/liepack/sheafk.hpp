#pragma once

#include <map>
#include <string>
#include <vector>

#include "liepack/geoparams.hpp"
#include "liepack/matrix.hpp"

namespace liepack {

enum class KBasis { Mu, P };

/// Element of the Grothendieck group of equivariant constructible sheaves on
/// the poset, as an integer vector over its complete geometric parameters.
struct KClass {
  std::vector<long long> coeffs; // indexed by complete_parameters_of order
  KBasis basis = KBasis::Mu;
};

/// Square integer change-of-basis matrix over the fixed parameter order.
struct ChangeOfBasis {
  IntMatrix matrix;
  std::vector<CompleteGeometricParameter> index; // row/column legend
};

/// Non-negative conormal multiplicities, one per stratum (poset order).
struct CharacteristicCycle {
  std::vector<long long> multiplicities;
};

inline size_t basis_index(const std::vector<CompleteGeometricParameter> &idx,
                          StratumId s, int character) {
  for (size_t k = 0; k < idx.size(); ++k)
    if (idx[k].stratum == s && idx[k].character == character)
      return k;
  throw InvalidParameter("complete parameter not in basis");
}

/// On P^1 minus two points a rank-1 local system has equal-order monodromy at
/// both punctures: trivial for the trivial character, order 2 for sgn. A
/// boundary point enters j_!* (hence survives in the mu-expansion of P) iff
/// that local monodromy is trivial.
inline bool boundary_monodromy_trivial(int character) { return character == 0; }

/// P(s,chi) expanded in the mu basis. Closed strata have P = mu; for the
/// open curve stratum, P(U,chi) = mu(U,chi) - sum over boundary points with
/// trivial local monodromy of mu(x,triv).
inline KClass ic_class_in_mu_basis(const StratumPoset &poset, StratumId s,
                                   int character) {
  const Stratum &st = find_stratum(poset, s);
  if (st.dimension > 1)
    throw UnsupportedGeometry("IC expansion implemented for curve strata only");
  auto idx = complete_parameters_of(poset);
  KClass out{std::vector<long long>(idx.size(), 0), KBasis::Mu};
  out.coeffs[basis_index(idx, s, character)] = 1;
  if (st.dimension == 1 && boundary_monodromy_trivial(character))
    for (StratumId b : st.boundary)
      out.coeffs[basis_index(idx, b, 0)] -= 1;
  return out;
}

/// Matrix expressing each mu class in the P basis (unitriangular under the
/// dimension-refined order).
inline ChangeOfBasis m_g_matrix(const StratumPoset &poset) {
  auto idx = complete_parameters_of(poset);
  size_t n = idx.size();
  // Rows of p_in_mu express each P class in the mu basis; m_g is its inverse.
  IntMatrix p_in_mu(n);
  for (size_t k = 0; k < n; ++k) {
    KClass p = ic_class_in_mu_basis(poset, idx[k].stratum, idx[k].character);
    p_in_mu[k] = p.coeffs;
  }
  return ChangeOfBasis{int_inverse(p_in_mu), idx};
}

/// m_r[i][j] = (-1)^{d_i - d_j} * (m_g^{-1})[j][i].
inline ChangeOfBasis m_r_matrix(const StratumPoset &poset) {
  ChangeOfBasis mg = m_g_matrix(poset);
  IntMatrix inv = int_inverse(mg.matrix);
  size_t n = inv.size();
  IntMatrix mr(n, std::vector<long long>(n));
  for (size_t i = 0; i < n; ++i) {
    int di = find_stratum(poset, mg.index[i].stratum).dimension;
    for (size_t j = 0; j < n; ++j) {
      int dj = find_stratum(poset, mg.index[j].stratum).dimension;
      long long sign = ((di - dj) % 2 == 0) ? 1 : -1;
      mr[i][j] = sign * inv[j][i];
    }
  }
  return ChangeOfBasis{mr, mg.index};
}

/// Euler characteristic of the stalk of P(s,chi) at each stratum, plus the
/// generic value on the open piece. Feeds the smooth-curve formula
/// chi(P) = -n X - sum (n - n_x) T*_x X.
inline CharacteristicCycle characteristic_cycle(const StratumPoset &poset,
                                                StratumId s, int character) {
  const Stratum &st = find_stratum(poset, s);
  CharacteristicCycle cc{std::vector<long long>(poset.strata.size(), 0)};
  bool has_curve = false;
  for (const Stratum &t : poset.strata)
    has_curve = has_curve || t.dimension == 1;
  if (!has_curve || st.dimension == 0) {
    if (!has_curve) {
      // Every stratum is a point; a simple sheaf contributes its own conormal.
      for (size_t k = 0; k < poset.strata.size(); ++k)
        if (poset.strata[k].id == s)
          cc.multiplicities[k] = 1;
      return cc;
    }
  }
  // Curve case: generic stalk value n and per-point values n_x of P(s,chi).
  long long n_generic;
  std::map<StratumId, long long> n_point;
  if (st.dimension == 0) {
    n_generic = 0;
    for (const Stratum &t : poset.strata)
      if (t.dimension == 0)
        n_point[t.id] = (t.id == s) ? 1 : 0;
  } else {
    // P(U,chi) shifted by 1: generic stalk Euler characteristic is -1; the
    // boundary stalk of j_!* is -1 when the local monodromy is trivial
    // (constant sheaf) and 0 otherwise (extension by zero).
    n_generic = -1;
    for (const Stratum &t : poset.strata)
      if (t.dimension == 0)
        n_point[t.id] = boundary_monodromy_trivial(character) ? -1 : 0;
  }
  for (size_t k = 0; k < poset.strata.size(); ++k) {
    const Stratum &t = poset.strata[k];
    if (t.dimension == 1)
      cc.multiplicities[k] = -n_generic;
    else
      cc.multiplicities[k] = n_point[t.id] - n_generic;
  }
  return cc;
}

/// Microlocal Arthur packet through the stratum s: all complete parameters
/// whose IC class has nonzero characteristic-cycle multiplicity along s.
inline std::vector<CompleteGeometricParameter>
arthur_microlocal_packet(const StratumPoset &poset, StratumId s) {
  size_t srow = 0;
  for (size_t k = 0; k < poset.strata.size(); ++k)
    if (poset.strata[k].id == s)
      srow = k;
  std::vector<CompleteGeometricParameter> out;
  for (const CompleteGeometricParameter &cp : complete_parameters_of(poset)) {
    CharacteristicCycle cc =
        characteristic_cycle(poset, cp.stratum, cp.character);
    if (cc.multiplicities[srow] != 0)
      out.push_back(cp);
  }
  return out;
}

} // namespace liepack
