#pragma once

#include <string>
#include <vector>

#include "liepack/lparams.hpp"
#include "liepack/orbits.hpp"

namespace liepack {

/// An Arthur parameter for a complex group, in coordinates: the SL(2)-part as
/// a unipotent class q (Jordan blocks occupy consecutive coordinates), the
/// C*-part z -> z^{lambda_hol} zbar^{lambda_anti}, and the image of j.
struct ArthurParameter {
  BasedRootDatum dual_group;
  Partition q;
  CartanVector lambda_hol;
  CartanVector lambda_anti;
  ExtendedElement j_part; // gamma_flag ignored; j lands in the delta-coset
};

/// Coordinate ranges of the Jordan blocks of q.
inline std::vector<std::pair<int, int>> jordan_ranges(const Partition &q) {
  std::vector<std::pair<int, int>> out;
  int start = 0;
  for (int part : q.parts()) {
    out.emplace_back(start, start + part);
    start += part;
  }
  return out;
}

/// Checks every defining constraint:
///  - lambda_hol - lambda_anti lies in the cocharacter lattice;
///  - boundedness Re(lambda_hol + lambda_anti) = 0 (temperedness on W_R);
///  - Ad(j) exchanges the holomorphic and antiholomorphic exponents;
///  - j^2 = psi(-1), i.e. j_part squares to exp(pi i (l_hol - l_anti));
///  - the C*-part and j commute with the SL(2)-triple of q.
inline const ArthurParameter &validate_arthur(const ArthurParameter &psi) {
  const BasedRootDatum &g = psi.dual_group;
  size_t n = static_cast<size_t>(g.dim());
  if (psi.q.total() != g.dim() || psi.lambda_hol.size() != n ||
      psi.lambda_anti.size() != n || psi.j_part.torus_exponent.size() != n)
    throw DimensionMismatch("Arthur data does not match the group dimension");
  if (!perm_is_involution(psi.j_part.weyl))
    throw InvalidParameter("j must have involutive Weyl part");
  CartanVector diff = psi.lambda_hol - psi.lambda_anti;
  if (!g.exponent_is_trivial(diff))
    throw InvalidParameter(
        "lambda_hol - lambda_anti must lie in the cocharacter lattice");
  for (size_t k = 0; k < n; ++k)
    if (!(psi.lambda_hol[k] + psi.lambda_anti[k]).re().is_zero())
      throw InvalidParameter("C*-part is not bounded on the unit circle");
  if (perm_apply(psi.j_part.weyl, psi.lambda_hol) != psi.lambda_anti)
    throw InvalidParameter("Ad(j) must swap lambda_hol and lambda_anti");
  CartanVector jsq = tits_square_exponent(psi.j_part.weyl) +
                     psi.j_part.torus_exponent +
                     perm_apply(psi.j_part.weyl, psi.j_part.torus_exponent);
  if (!g.exponent_is_trivial(jsq - Gaussian(Rational(1, 2)) * diff))
    throw InvalidParameter("j^2 inconsistent with psi(-1)");
  for (auto [lo, hi] : jordan_ranges(psi.q)) {
    if (hi - lo == 1)
      continue;
    for (int k = lo; k < hi; ++k) {
      if (psi.lambda_hol[k] != psi.lambda_hol[lo] ||
          psi.lambda_anti[k] != psi.lambda_anti[lo])
        throw SL2NotInLevi("C*-part must be constant on each Jordan block");
      if (psi.j_part.weyl[k] != k ||
          psi.j_part.torus_exponent[k] != psi.j_part.torus_exponent[lo])
        throw SL2NotInLevi("j must centralize the SL(2)-triple");
    }
  }
  return psi;
}

enum class ArthurClass { Unipotent, Tempered, Mixed };

inline std::string arthur_class_name(ArthurClass c) {
  switch (c) {
  case ArthurClass::Unipotent:
    return "unipotent";
  case ArthurClass::Tempered:
    return "tempered";
  case ArthurClass::Mixed:
    return "mixed";
  }
  return "?";
}

/// Unipotent = trivial on C* (checked first); tempered = trivial SL(2)-part.
inline ArthurClass classify_arthur(const ArthurParameter &psi) {
  validate_arthur(psi);
  if (is_zero(psi.lambda_hol) && is_zero(psi.lambda_anti))
    return ArthurClass::Unipotent;
  bool trivial_sl2 = true;
  for (int part : psi.q.parts())
    trivial_sl2 = trivial_sl2 && part == 1;
  return trivial_sl2 ? ArthurClass::Tempered : ArthurClass::Mixed;
}

/// Blockwise semisimple element h_q/2 of the SL(2)-part:
/// ((q_i-1)/2, (q_i-3)/2, ...) on each Jordan block.
inline CartanVector half_h_of(const Partition &q) {
  CartanVector h;
  for (int part : q.parts())
    for (int k = 0; k < part; ++k)
      h.push_back(Gaussian(Rational(part - 1 - 2 * k, 2)));
  return h;
}

/// The associated Langlands parameter: lambda = lambda_hol + h_q/2 and
/// y = exp(pi i lambda) * psi(j) * delta. The torus exponent is reduced to
/// the canonical representative by averaging over each 2-cycle of the Weyl
/// part (torus conjugation shifts a 2-cycle pair by (c,-c)).
inline LanglandsParameter phi_of_psi(const ArthurParameter &psi) {
  validate_arthur(psi);
  CartanVector lambda = psi.lambda_hol + half_h_of(psi.q);
  CartanVector v =
      perm_apply(psi.j_part.weyl, Gaussian(Rational(1, 2)) * lambda) +
      psi.j_part.torus_exponent;
  for (size_t k = 0; k < v.size(); ++k) {
    size_t m = static_cast<size_t>(psi.j_part.weyl[k]);
    if (m > k) {
      Gaussian avg = Gaussian(Rational(1, 2)) * (v[k] + v[m]);
      v[k] = v[m] = avg;
    }
  }
  return validate_parameter(psi.dual_group,
                            ExtendedElement{psi.j_part.weyl, v, true}, lambda);
}

/// The Levi splitting psi = (psi0, psi1): the Levi is the centralizer of
/// psi(C*), i.e. coordinates grouped by equal (lambda_hol, lambda_anti)
/// pairs; psi0 keeps the SL(2)-part (each Jordan block must land in a single
/// group); psi1 becomes the central functional xi1 with block value
/// (l_hol - l_anti) + (l_hol + l_anti)/2.
struct LeviSplit {
  LeviBlocks levi;
  std::vector<Partition> q_blocks; // psi0, per Levi block
  std::vector<Gaussian> xi1;       // one value per Levi block
};

inline LeviSplit split_at_levi(const ArthurParameter &psi) {
  validate_arthur(psi);
  if (psi.dual_group.tag() != GroupTag::GL)
    throw UnsupportedGroup("Levi splitting uses the self-dual GL(n) datum");
  // Group values in order of first appearance for a deterministic Levi.
  std::vector<std::pair<Gaussian, Gaussian>> values;
  std::vector<int> sizes;
  std::vector<std::vector<int>> parts_at;
  auto group_of = [&](int k) -> size_t {
    std::pair<Gaussian, Gaussian> key{psi.lambda_hol[k], psi.lambda_anti[k]};
    for (size_t g = 0; g < values.size(); ++g)
      if (values[g] == key)
        return g;
    values.push_back(key);
    sizes.push_back(0);
    parts_at.emplace_back();
    return values.size() - 1;
  };
  for (auto [lo, hi] : jordan_ranges(psi.q)) {
    size_t g = group_of(lo);
    for (int k = lo; k < hi; ++k)
      if (group_of(k) != g)
        throw SL2NotInLevi("SL(2)-part does not centralize psi(C*)");
    sizes[g] += hi - lo;
    parts_at[g].push_back(hi - lo);
  }
  LeviSplit out{LeviBlocks(sizes), {}, {}};
  for (size_t g = 0; g < values.size(); ++g) {
    std::sort(parts_at[g].begin(), parts_at[g].end(), std::greater<int>());
    out.q_blocks.emplace_back(parts_at[g]);
    const auto &[lh, la] = values[g];
    out.xi1.push_back((lh - la) + Gaussian(Rational(1, 2)) * (lh + la));
  }
  return out;
}

/// Orbit duality on the Levi: per block the transpose of that block's
/// SL(2)-partition, with zero central values.
inline std::vector<Partition> d_zero(const std::vector<Partition> &q_blocks) {
  std::vector<Partition> out;
  out.reserve(q_blocks.size());
  for (const Partition &p : q_blocks)
    out.push_back(p.transpose());
  return out;
}

/// Standalone form: distributes the parts of q over the Levi blocks (largest
/// parts first, first block with room), then transposes blockwise.
inline std::vector<Partition> d_zero(const Partition &q,
                                     const LeviBlocks &levi) {
  std::vector<int> room(levi.blocks().begin(), levi.blocks().end());
  std::vector<std::vector<int>> assigned(room.size());
  for (int part : q.parts()) {
    bool placed = false;
    for (size_t b = 0; b < room.size() && !placed; ++b)
      if (room[b] >= part) {
        room[b] -= part;
        assigned[b].push_back(part);
        placed = true;
      }
    if (!placed)
      throw BlockMismatch("q does not fit blockwise in the Levi");
  }
  for (int r : room)
    if (r != 0)
      throw BlockMismatch("q does not fill the Levi blocks");
  std::vector<Partition> blocks;
  blocks.reserve(assigned.size());
  for (auto &parts : assigned)
    blocks.emplace_back(parts);
  return d_zero(blocks);
}

/// A coadjoint orbit of GL(n,C) viewed as a real group: the iota-image of a
/// complex descriptor, stored as (value of the functional at X, at iX,
/// Jordan type) per distinct central value.
struct RealCoadjointDescriptor {
  struct Entry {
    Rational on_x;  // i-coefficient at X = iota(xi) on X, i.e. Im(xi)
    Rational on_ix; // i-coefficient at iX, i.e. Re(xi)
    Partition type;

    friend bool operator==(const Entry &, const Entry &) = default;
    friend bool operator<(const Entry &a, const Entry &b) {
      if (a.on_x != b.on_x)
        return a.on_x < b.on_x;
      if (a.on_ix != b.on_ix)
        return a.on_ix < b.on_ix;
      return a.type < b.type;
    }
  };
  std::vector<Entry> entries;
  int ambient = 0;

  friend bool operator==(const RealCoadjointDescriptor &,
                         const RealCoadjointDescriptor &) = default;
  friend bool operator<(const RealCoadjointDescriptor &a,
                        const RealCoadjointDescriptor &b) {
    if (a.ambient != b.ambient)
      return a.ambient < b.ambient;
    return a.entries < b.entries;
  }

  bool is_nilpotent() const {
    for (const Entry &e : entries)
      if (!e.on_x.is_zero() || !e.on_ix.is_zero())
        return false;
    return true;
  }

  bool is_integral() const {
    for (const Entry &e : entries)
      if (!e.on_ix.is_integer())
        return false;
    return true;
  }
};

inline RealCoadjointDescriptor iota_descriptor(const CoadjointDescriptor &d) {
  RealCoadjointDescriptor out;
  out.ambient = d.ambient;
  for (const auto &[xi, p] : d.entries)
    out.entries.push_back({xi.im(), xi.re(), p});
  return out;
}

inline CoadjointDescriptor iota_inverse_descriptor(
    const RealCoadjointDescriptor &d) {
  CoadjointDescriptor out;
  out.ambient = d.ambient;
  for (const auto &e : d.entries)
    out.entries.emplace_back(Gaussian(e.on_ix, e.on_x), e.type);
  return out;
}

/// The duality map D = iota . Bind(L, D_0(psi0), xi1) . split.
inline RealCoadjointDescriptor duality_map(const ArthurParameter &psi) {
  LeviSplit split = split_at_levi(psi);
  if (!is_integral_center(split.xi1, split.levi))
    throw InvalidParameter("central functional is not integral");
  InductionDatum datum{split.levi, d_zero(split.q_blocks), split.xi1};
  return iota_descriptor(bind(datum));
}

/// Builds an Arthur parameter from the C*-exponents alone, solving for an
/// image of j: an involution exchanging lambda_hol with lambda_anti, with the
/// torus exponent chosen so that j^2 = psi(-1). Used by the CLI front end.
inline ArthurParameter make_arthur(const BasedRootDatum &dual_group,
                                   const Partition &q,
                                   const CartanVector &lambda_hol,
                                   const CartanVector &lambda_anti) {
  size_t n = lambda_hol.size();
  Perm w(n, -1);
  for (size_t k = 0; k < n; ++k) {
    if (w[k] != -1)
      continue;
    if (lambda_hol[k] == lambda_anti[k]) {
      w[k] = static_cast<int>(k);
      continue;
    }
    bool paired = false;
    for (size_t m = k + 1; m < n && !paired; ++m)
      if (w[m] == -1 && lambda_hol[m] == lambda_anti[k] &&
          lambda_anti[m] == lambda_hol[k]) {
        w[k] = static_cast<int>(m);
        w[m] = static_cast<int>(k);
        paired = true;
      }
    if (!paired)
      throw InvalidParameter("no involution exchanges the C*-exponents");
  }
  CartanVector v(n);
  for (size_t k = 0; k < n; ++k)
    if (w[k] > static_cast<int>(k))
      v[k] = Gaussian(Rational(1, 2)) * (lambda_hol[k] - lambda_anti[k]) -
             Gaussian(Rational(1, 2));
  ArthurParameter psi{dual_group, q, lambda_hol, lambda_anti,
                      ExtendedElement{w, v, true}};
  validate_arthur(psi);
  return psi;
}

/// Descriptor of a Kirillov packet: the minimal Levi, the fixture-backed
/// unipotent labels on it, and the unitary-character data iota(xi).
struct PacketDescriptor {
  LeviBlocks levi;
  std::vector<std::string> unipotent_labels;
  std::vector<std::pair<Rational, Rational>> character; // (on_x, on_ix) per block
};

/// Fixture-backed resolution. Supported: regular semisimple integral covers
/// (torus Levi, Unip = {trivial character}) and the rank-2 zero orbit whose
/// packet is tabulated for the split/compact pair of forms.
inline PacketDescriptor
kirillov_packet_descriptor(const RealCoadjointDescriptor &cover) {
  if (!cover.is_integral())
    throw UnsupportedFixture("cover is not integral");
  InductionDatum minimal = minimal_datum(iota_inverse_descriptor(cover));
  bool torus_levi = true;
  for (int b : minimal.levi.blocks())
    torus_levi = torus_levi && b == 1;
  PacketDescriptor out{minimal.levi, {}, {}};
  for (const Gaussian &xi : minimal.xi)
    out.character.emplace_back(xi.im(), xi.re());
  bool regular = true;
  for (size_t a = 0; a < minimal.xi.size(); ++a)
    for (size_t b = a + 1; b < minimal.xi.size(); ++b)
      regular = regular && !(minimal.xi[a] == minimal.xi[b]);
  if (torus_levi && regular) {
    out.unipotent_labels = {"trivial"};
    return out;
  }
  bool zero_orbit_gl2 =
      cover.ambient == 2 && cover.entries.size() == 1 &&
      cover.entries[0].on_x.is_zero() && cover.entries[0].on_ix.is_zero() &&
      cover.entries[0].type == Partition({1, 1});
  if (zero_orbit_gl2) {
    out.unipotent_labels = {"triv of G_s", "triv of G_c"};
    return out;
  }
  throw UnsupportedFixture("no unipotent table for this Levi and orbit");
}

} // namespace liepack
