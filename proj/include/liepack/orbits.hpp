#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "liepack/gaussian.hpp"
#include "liepack/partition.hpp"

namespace liepack {

/// Element of g* (or of z(l)*) in a fixed coordinate basis.
using ComplexFunctional = std::vector<Gaussian>;

/// Element of Hom_R(g, iR), stored via its i-coefficients on the real basis
/// X_k and on iX_k. Round-trips with ComplexFunctional under iota.
struct ImaginaryFunctional {
  std::vector<Rational> on_x;  // i-coefficient of the value at X_k
  std::vector<Rational> on_ix; // i-coefficient of the value at iX_k

  friend bool operator==(const ImaginaryFunctional &,
                         const ImaginaryFunctional &) = default;
};

/// iota(mu)(X) = i*Im(mu(X)): on X_k this picks Im(mu_k), on iX_k it picks
/// Im(i*mu_k) = Re(mu_k).
inline ImaginaryFunctional iota(const ComplexFunctional &mu) {
  ImaginaryFunctional out;
  for (const Gaussian &m : mu) {
    out.on_x.push_back(m.im());
    out.on_ix.push_back(m.re());
  }
  return out;
}

/// iota^{-1}(lambda)(X) = lambda(X) - i*lambda(iX).
inline ComplexFunctional iota_inverse(const ImaginaryFunctional &lambda) {
  if (lambda.on_x.size() != lambda.on_ix.size())
    throw DimensionMismatch("imaginary functional coordinate mismatch");
  ComplexFunctional out;
  for (size_t k = 0; k < lambda.on_x.size(); ++k) {
    // lambda(X_k) = i*a, lambda(iX_k) = i*b  =>  mu_k = i*a - i*(i*b) = b + i*a.
    out.push_back(Gaussian(lambda.on_ix[k], lambda.on_x[k]));
  }
  return out;
}

/// Birational induction datum (L, O_L, xi) in type A: Levi block sizes, one
/// nilpotent partition per block, one central value per block.
struct InductionDatum {
  LeviBlocks levi;
  std::vector<Partition> orbits;
  std::vector<Gaussian> xi; // constant value on each block's center

  void check() const {
    if (orbits.size() != levi.blocks().size() ||
        xi.size() != levi.blocks().size())
      throw BlockMismatch("datum arity does not match the Levi blocks");
    for (size_t k = 0; k < orbits.size(); ++k)
      if (orbits[k].total() != levi.blocks()[k])
        throw BlockMismatch("orbit partition does not fit its block");
  }
};

/// A coadjoint orbit of GL(n) (covers are trivial here): pairwise distinct
/// central values, each with the Jordan type of the nilpotent part, in
/// canonical value order.
struct CoadjointDescriptor {
  std::vector<std::pair<Gaussian, Partition>> entries;
  int ambient = 0;

  friend bool operator==(const CoadjointDescriptor &,
                         const CoadjointDescriptor &) = default;
  friend bool operator<(const CoadjointDescriptor &a,
                        const CoadjointDescriptor &b) {
    if (a.ambient != b.ambient)
      return a.ambient < b.ambient;
    if (a.entries.size() != b.entries.size())
      return a.entries.size() < b.entries.size();
    for (size_t k = 0; k < a.entries.size(); ++k) {
      if (a.entries[k].first != b.entries[k].first)
        return a.entries[k].first < b.entries[k].first;
      if (a.entries[k].second != b.entries[k].second)
        return a.entries[k].second < b.entries[k].second;
    }
    return false;
  }

  bool is_nilpotent() const {
    for (const auto &[v, p] : entries)
      if (!v.is_zero())
        return false;
    return true;
  }

  std::string str() const {
    std::string s = "{";
    for (size_t k = 0; k < entries.size(); ++k) {
      if (k)
        s += ", ";
      s += "xi=" + entries[k].first.str() + " orbit=" + entries[k].second.str();
    }
    return s + "}";
  }
};

/// Birational induction, realized combinatorially: group blocks by central
/// value and take columnwise partition sums within each group.
inline CoadjointDescriptor bind(const InductionDatum &d) {
  d.check();
  std::map<Gaussian, std::vector<Partition>> groups;
  for (size_t k = 0; k < d.xi.size(); ++k)
    groups[d.xi[k]].push_back(d.orbits[k]);
  CoadjointDescriptor out;
  out.ambient = d.levi.total();
  for (const auto &[value, parts] : groups)
    out.entries.emplace_back(value, Partition::colsum(parts));
  return out;
}

/// Enumerates all (blocks, orbits) pairs with the given total; used by the
/// brute-force searches. Blocks are generated as partitions of n (one
/// representative per conjugacy class of Levi).
inline void for_each_levi_datum(
    int n, const std::function<void(const LeviBlocks &,
                                    const std::vector<Partition> &)> &fn) {
  for (const Partition &blocks : Partition::all_of(n)) {
    LeviBlocks levi(blocks.parts());
    std::vector<std::vector<Partition>> choices;
    for (int b : blocks.parts())
      choices.push_back(Partition::all_of(b));
    std::vector<size_t> pick(choices.size(), 0);
    while (true) {
      std::vector<Partition> orbits;
      for (size_t k = 0; k < pick.size(); ++k)
        orbits.push_back(choices[k][pick[k]]);
      fn(levi, orbits);
      size_t k = 0;
      while (k < pick.size() && ++pick[k] == choices[k].size())
        pick[k++] = 0;
      if (k == pick.size())
        break;
    }
  }
}

/// Brute force over all proper Levi data with xi = 0: the orbit is rigid iff
/// no such datum binds to it.
inline bool is_birationally_rigid(const Partition &p, int n) {
  if (p.total() != n)
    throw BlockMismatch("partition does not have total n");
  bool rigid = true;
  for_each_levi_datum(n, [&](const LeviBlocks &levi,
                             const std::vector<Partition> &orbits) {
    if (!levi.is_proper() || !rigid)
      return;
    InductionDatum d{levi, orbits, std::vector<Gaussian>(orbits.size())};
    if (bind(d).entries == std::vector<std::pair<Gaussian, Partition>>{
                               {Gaussian(), p}})
      rigid = false;
  });
  return rigid;
}

/// The unique minimal datum binding to the descriptor: per value group the
/// Levi blocks are the transpose parts of the group's partition, carrying
/// zero orbits.
inline InductionDatum minimal_datum(const CoadjointDescriptor &desc) {
  std::vector<int> blocks;
  std::vector<Partition> orbits;
  std::vector<Gaussian> xi;
  for (const auto &[value, p] : desc.entries) {
    Partition t = p.transpose();
    for (int b : t.parts()) {
      blocks.push_back(b);
      orbits.push_back(Partition::zero_orbit(b));
      xi.push_back(value);
    }
  }
  return InductionDatum{LeviBlocks(blocks), std::move(orbits), std::move(xi)};
}

/// Central-value integrality: the differential of a unitary character of a
/// block GL(b) is k + it with k integral, so each block value must have
/// integer real part.
inline bool is_integral_center(const std::vector<Gaussian> &xi,
                               const LeviBlocks &levi) {
  if (xi.size() != levi.blocks().size())
    throw BlockMismatch("one central value per Levi block expected");
  for (const Gaussian &v : xi)
    if (!v.re().is_integer())
      return false;
  return true;
}

} // namespace liepack
