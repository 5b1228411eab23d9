#include <catch2/catch_amalgamated.hpp>

#include "liepack/lparams.hpp"

using namespace liepack;

namespace {

const BasedRootDatum kPgl2 = BasedRootDatum::pgl(2);
const BasedRootDatum kSl2 = kPgl2.dual();

CartanVector diag(const Gaussian &a) { return CartanVector{a, -a}; }

ExtendedElement diag_y(const Gaussian &v) {
  return ExtendedElement{perm_identity(2), CartanVector{v, -v}, true};
}

} // namespace

TEST_CASE("parameter validation checks the square identity") {
  // diag(i,-i).delta squares to -Id = exp(2 pi i rho).
  CHECK_NOTHROW(
      validate_parameter(kSl2, diag_y(Gaussian(Rational(1, 4))), rho_vector(2)));
  // The identity torus part squares to Id, not -Id.
  CHECK_THROWS_AS(validate_parameter(kSl2, diag_y(Gaussian()), rho_vector(2)),
                  SquareMismatch);
  // Antidiagonal with trivial torus part: n_s^2 = -Id = exp(2 pi i lambda)
  // iff a is in 1/2 + Z.
  ExtendedElement anti{Perm{1, 0}, cartan_zero(2), true};
  CHECK_NOTHROW(validate_parameter(kSl2, anti, diag(Gaussian(Rational(3, 2)))));
  CHECK_THROWS_AS(validate_parameter(kSl2, anti, diag(Gaussian(1))),
                  SquareMismatch);
  // The gamma flag is mandatory.
  ExtendedElement inner{perm_identity(2),
                        CartanVector{Gaussian(Rational(1, 4)),
                                     Gaussian(Rational(-1, 4))},
                        false};
  CHECK_THROWS_AS(validate_parameter(kSl2, inner, rho_vector(2)),
                  NotInNonIdentityComponent);
}

TEST_CASE("enumeration matches the classification of classes") {
  CHECK(enumerate_parameters(kPgl2, Gaussian(Rational(1, 2))).size() == 3);
  CHECK(enumerate_parameters(kPgl2, Gaussian(Rational(3, 2))).size() == 3);
  CHECK(enumerate_parameters(kPgl2, Gaussian(Rational(2, 3))).size() == 2);
  CHECK(enumerate_parameters(kPgl2, Gaussian::i()).size() == 2);
  CHECK_THROWS_AS(enumerate_parameters(kPgl2, Gaussian(Rational(-1, 2))),
                  NormalizationViolated);
  CHECK_THROWS_AS(enumerate_parameters(kPgl2, -Gaussian::i()),
                  NormalizationViolated);
  // Every enumerated parameter re-validates.
  for (const Gaussian &a :
       {Gaussian(Rational(1, 2)), Gaussian(Rational(2, 3)), Gaussian::i()})
    for (const LanglandsParameter &p : enumerate_parameters(kPgl2, a))
      CHECK_NOTHROW(validate_parameter(p.group, p.y, p.lambda));
}

TEST_CASE("temperedness matches the Arthur-example classification") {
  struct Sample {
    Gaussian a;
    bool principal_tempered; // the two diagonal classes
  };
  std::vector<Sample> grid = {
      {Gaussian(Rational(1, 2)), false}, {Gaussian(Rational(3, 2)), false},
      {Gaussian::i(), true},             {Gaussian(Rational(0), Rational(2)), true},
      {Gaussian(Rational(2, 3)), false}, {Gaussian(Rational(1), Rational(1)), false}};
  for (const Sample &s : grid)
    for (const LanglandsParameter &p : enumerate_parameters(kPgl2, s.a)) {
      bool expected =
          perm_is_identity(p.y.weyl) ? s.principal_tempered : true;
      CHECK(is_tempered(p) == expected);
    }
}

TEST_CASE("discrete series packets") {
  for (const Gaussian &a :
       {Gaussian(Rational(1, 2)), Gaussian(Rational(3, 2)), Gaussian::i()})
    for (const LanglandsParameter &p : enumerate_parameters(kPgl2, a)) {
      CHECK(is_discrete_series_packet(p) == !perm_is_identity(p.y.weyl));
      if (is_discrete_series_packet(p))
        CHECK(is_tempered(p)); // discrete series are tempered
    }
}

TEST_CASE("component groups and centralizer labels") {
  auto params = enumerate_parameters(kPgl2, Gaussian(Rational(1, 2)));
  REQUIRE(params.size() == 3);
  CHECK(component_group(params[0]) == FiniteAbelianGroup::trivial());
  CHECK(component_group(params[1]) == FiniteAbelianGroup::trivial());
  CHECK(component_group(params[2]) == FiniteAbelianGroup::z2());
  CHECK(centralizer_label(params[0]) == "H^v");
  CHECK(centralizer_label(params[2]) == "{+-Id}");
  // Generic imaginary a: both diagonal classes have connected centralizer.
  for (const LanglandsParameter &p : enumerate_parameters(kPgl2, Gaussian::i()))
    CHECK(component_group(p) == FiniteAbelianGroup::trivial());
  // Four complete parameters at lambda = rho: 1 + 1 + 2 characters.
  int complete = 0;
  for (const LanglandsParameter &p : params)
    complete += component_group(p).order();
  CHECK(complete == 4);
}

TEST_CASE("packet label fixtures") {
  auto params = enumerate_parameters(kPgl2, Gaussian(Rational(1, 2)));
  auto row1 = packet_labels({params[0], 0});
  REQUIRE(row1.size() == 1);
  CHECK(row1[0].real_form == "split");
  CHECK(row1[0].description == "spherical finite-dimensional of dimension 1");
  CHECK(row1[0].infl_char == params[0].lambda);
  auto row3 = packet_labels({params[2], 0});
  REQUIRE(row3.size() == 2);
  CHECK(row3[0].description ==
        "discrete series of infinitesimal character 1/2");
  CHECK(row3[1].real_form == "compact");
  CHECK(row3[1].description == "finite-dimensional of dimension 1");
  auto ps = enumerate_parameters(kPgl2, Gaussian(Rational(2, 3)));
  CHECK(packet_labels({ps[0], 0})[0].description ==
        "spherical principal series of infinitesimal character 2/3");
  CHECK_THROWS_AS(packet_labels({params[0], 5}), InvalidParameter);
}

TEST_CASE("y rendering") {
  auto params = enumerate_parameters(kPgl2, Gaussian(Rational(1, 2)));
  CHECK(y_str(params[0]) == "diag(i,-i).delta");
  CHECK(y_str(params[1]) == "diag(-i,i).delta");
  CHECK(y_str(params[2]) == "antidiag(1,-1).delta");
}
