#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "liepack/lparams.hpp"

namespace liepack {

/// The integral root subsystem m(lambda) with its Z-grading n = <alpha,lambda>.
struct GradedRoot {
  std::vector<long long> root;
  long long grade = 0;
};

struct GradedSubsystem {
  std::vector<GradedRoot> roots;           // all integral roots, graded
  std::vector<std::vector<long long>> u_roots; // grade > 0
  std::vector<std::vector<long long>> l_roots; // grade 0
};

inline GradedSubsystem integral_graded_system(const BasedRootDatum &dual_group,
                                              const CartanVector &lambda) {
  GradedSubsystem out;
  for (const std::vector<long long> &alpha : dual_group.all_roots()) {
    Gaussian v = pairing(alpha, lambda);
    if (v.is_real() && v.re().is_integer()) {
      long long n = v.re().num();
      out.roots.push_back({alpha, n});
      if (n > 0)
        out.u_roots.push_back(alpha);
      else if (n == 0)
        out.l_roots.push_back(alpha);
    }
  }
  return out;
}

/// Canonical flat F(lambda) = lambda + u(lambda); in aligned form the flat
/// meets the Cartan in the single point `base`.
struct CanonicalFlat {
  CartanVector base;
  std::vector<std::vector<long long>> u_roots;
};

struct GeometricParameter {
  ExtendedElement y;
  CanonicalFlat flat;
};

inline GeometricParameter to_geometric(const LanglandsParameter &p) {
  GradedSubsystem sys = integral_graded_system(p.group, p.lambda);
  return GeometricParameter{p.y, CanonicalFlat{p.lambda, sys.u_roots}};
}

enum class StratumId { N, S, U };

inline std::string stratum_name(StratumId id) {
  switch (id) {
  case StratumId::N:
    return "N";
  case StratumId::S:
    return "S";
  case StratumId::U:
    return "U";
  }
  return "?";
}

/// A G-vee-orbit stratum of X(O,G^L), with its equivariant fundamental group
/// and (for curve strata) the boundary points in its closure.
struct Stratum {
  StratumId id;
  int dimension = 0;
  FiniteAbelianGroup fundamental_group;
  std::vector<StratumId> boundary; // lower-dimensional strata in the closure
};

/// The orbit stratification of X(O,G^L) for a fixed semisimple orbit O,
/// represented by its aligned base point lambda.
struct StratumPoset {
  BasedRootDatum group; // G (not the dual)
  CartanVector lambda;
  std::vector<Stratum> strata; // dimension-ascending, then id order
};

/// Case analysis for the supported quotients M(lambda)/P(lambda):
///  - no positive-grade integral roots: a point per y-class;
///  - odd pairing <alpha,lambda>: the P^1 picture with torus symmetric
///    subgroup (north pole, south pole, open complement);
///  - anything else is outside the supported geometry.
inline StratumPoset stratify_orbit(const BasedRootDatum &group,
                                   const CartanVector &lambda) {
  StratumPoset poset{group, lambda, {}};
  if (group.tag() == GroupTag::Torus) {
    poset.strata.push_back({StratumId::N, 0, FiniteAbelianGroup::trivial(), {}});
    return poset;
  }
  if (!(group.tag() == GroupTag::PGL && group.dim() == 2))
    throw UnsupportedGroup("stratification implemented for the PGL(2) class");
  BasedRootDatum dual = group.dual();
  if (lambda.size() != 2 || !dual.in_cartan(lambda))
    throw InvalidParameter("lambda must be diag(a,-a)");
  Gaussian two_a = pairing(dual.all_roots()[0], lambda); // <alpha,lambda> = 2a
  bool integral = two_a.is_real() && two_a.re().is_integer();
  if (!integral || two_a.is_zero()) {
    // M(lambda)/P(lambda) is a point; strata match the y-classes, which for
    // this class are the two diagonal square roots.
    poset.strata.push_back({StratumId::N, 0, FiniteAbelianGroup::trivial(), {}});
    poset.strata.push_back({StratumId::S, 0, FiniteAbelianGroup::trivial(), {}});
    return poset;
  }
  if (two_a.re().num() % 2 == 0)
    throw UnsupportedGeometry(
        "integral lambda with even pairing: flag variety beyond the torus-P^1 case");
  poset.strata.push_back({StratumId::N, 0, FiniteAbelianGroup::trivial(), {}});
  poset.strata.push_back({StratumId::S, 0, FiniteAbelianGroup::trivial(), {}});
  poset.strata.push_back(
      {StratumId::U, 1, FiniteAbelianGroup::z2(), {StratumId::N, StratumId::S}});
  return poset;
}

/// A complete geometric parameter of the poset: a stratum together with a
/// character of its equivariant fundamental group.
struct CompleteGeometricParameter {
  StratumId stratum;
  int character = 0; // 0 = trivial; for Z/2 the index 1 is sgn
};

inline std::string character_name(const Stratum &s, int character) {
  if (s.fundamental_group.is_trivial())
    return "triv";
  return character == 0 ? "triv" : "sgn";
}

/// Deterministic order: dimension ascending, then id, then character index.
inline std::vector<CompleteGeometricParameter>
complete_parameters_of(const StratumPoset &poset) {
  std::vector<CompleteGeometricParameter> out;
  for (const Stratum &s : poset.strata)
    for (int c = 0; c < s.fundamental_group.order(); ++c)
      out.push_back({s.id, c});
  return out;
}

inline const Stratum &find_stratum(const StratumPoset &poset, StratumId id) {
  for (const Stratum &s : poset.strata)
    if (s.id == id)
      return s;
  throw InvalidParameter("stratum not in poset");
}

} // namespace liepack
