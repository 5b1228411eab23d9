#include <catch2/catch_amalgamated.hpp>

#include "liepack/arthur.hpp"
#include "liepack/report.hpp"

using namespace liepack;

namespace {

const BasedRootDatum kSl2 = BasedRootDatum::sl(2);
const BasedRootDatum kGl2 = BasedRootDatum::gl(2);

/// psi_a^{DS}: trivial SL(2)-part, C*-part swapped by the antidiagonal j.
ArthurParameter psi_ds(const Gaussian &a) {
  return ArthurParameter{kSl2, Partition({1, 1}), CartanVector{a, -a},
                         CartanVector{-a, a},
                         ExtendedElement{Perm{1, 0}, cartan_zero(2), true}};
}

/// psi_a^{SP}: trivial SL(2)-part, diagonal C*-part, trivial j.
ArthurParameter psi_sp(const Gaussian &a) {
  return ArthurParameter{kSl2, Partition({1, 1}), CartanVector{a, -a},
                         CartanVector{a, -a},
                         ExtendedElement{perm_identity(2), cartan_zero(2),
                                         true}};
}

} // namespace

TEST_CASE("Arthur parameter validation") {
  CHECK_NOTHROW(validate_arthur(unipotent_psi_plus()));
  CHECK_NOTHROW(validate_arthur(unipotent_psi_minus()));
  CHECK_NOTHROW(validate_arthur(psi_ds(Gaussian(Rational(3, 2)))));
  CHECK_NOTHROW(validate_arthur(psi_sp(Gaussian::i())));
  // Unbounded C*-part (nonzero real part of lambda_hol + lambda_anti).
  ArthurParameter bad = psi_sp(Gaussian(Rational(1, 3)));
  CHECK_THROWS_AS(validate_arthur(bad), InvalidParameter);
  // C*-part not constant on the Jordan block of q = (2).
  ArthurParameter split_block{
      kGl2, Partition({2}), CartanVector{Gaussian::i(), Gaussian()},
      CartanVector{Gaussian::i(), Gaussian()},
      ExtendedElement{perm_identity(2), cartan_zero(2), true}};
  CHECK_THROWS_AS(validate_arthur(split_block), SL2NotInLevi);
}

TEST_CASE("classification of Arthur parameters") {
  CHECK(classify_arthur(unipotent_psi_plus()) == ArthurClass::Unipotent);
  CHECK(classify_arthur(unipotent_psi_minus()) == ArthurClass::Unipotent);
  CHECK(classify_arthur(psi_sp(Gaussian::i())) == ArthurClass::Tempered);
  CHECK(classify_arthur(psi_ds(Gaussian(Rational(1, 2)))) ==
        ArthurClass::Tempered);
  // Nontrivial SL(2)-part together with a nontrivial bounded C*-part.
  ArthurParameter mixed{
      BasedRootDatum::gl(3), Partition({2, 1}),
      CartanVector{Gaussian::i(), Gaussian::i(), Gaussian()},
      CartanVector{Gaussian::i(), Gaussian::i(), Gaussian()},
      ExtendedElement{perm_identity(3), cartan_zero(3), true}};
  CHECK(classify_arthur(mixed) == ArthurClass::Mixed);
}

TEST_CASE("the associated Langlands parameter phi_psi") {
  LanglandsParameter plus = phi_of_psi(unipotent_psi_plus());
  CHECK(plus.lambda == rho_vector(2));
  CHECK(y_str(plus) == "diag(i,-i).delta");

  LanglandsParameter minus = phi_of_psi(unipotent_psi_minus());
  CHECK(minus.lambda == rho_vector(2));
  CHECK(y_str(minus) == "diag(-i,i).delta");

  // psi_a^{DS} at a = 3/2 lands on the enumerated discrete-series class.
  LanglandsParameter ds = phi_of_psi(psi_ds(Gaussian(Rational(3, 2))));
  auto rows =
      enumerate_parameters(BasedRootDatum::pgl(2), Gaussian(Rational(3, 2)));
  CHECK(ds.lambda == rows[2].lambda);
  CHECK(ds.y.weyl == rows[2].y.weyl);
  CHECK(ds.y.torus_exponent == rows[2].y.torus_exponent);
  CHECK(is_discrete_series_packet(ds));

  // Tempered chain: trivial SL(2)-part gives a tempered phi_psi.
  for (const Gaussian &a : {Gaussian::i(), Gaussian(Rational(0), Rational(2))})
    CHECK(is_tempered(phi_of_psi(psi_sp(a))));
  CHECK(is_tempered(phi_of_psi(psi_ds(Gaussian(Rational(1, 2))))));
  // ...and the unipotent ones are not tempered.
  CHECK_FALSE(is_tempered(phi_of_psi(unipotent_psi_plus())));
}

TEST_CASE("Levi splitting") {
  // Zero C*-part: the Levi is the full group and xi1 = 0.
  ArthurParameter unip{kGl2, Partition({2}), cartan_zero(2), cartan_zero(2),
                       ExtendedElement{perm_identity(2), cartan_zero(2),
                                       true}};
  LeviSplit full = split_at_levi(unip);
  CHECK(full.levi.blocks() == std::vector<int>{2});
  CHECK(full.q_blocks == std::vector<Partition>{Partition({2})});
  CHECK(full.xi1 == std::vector<Gaussian>{Gaussian()});

  // Regular imaginary C*-part with q = (1,1): torus Levi, xi1 = (it, 0).
  Gaussian it(Rational(0), Rational(3));
  CartanVector lam{it, Gaussian()};
  ArthurParameter reg{kGl2, Partition({1, 1}), lam, lam,
                      ExtendedElement{perm_identity(2), cartan_zero(2), true}};
  LeviSplit t = split_at_levi(reg);
  CHECK(t.levi.blocks() == std::vector<int>{1, 1});
  CHECK(t.xi1 == std::vector<Gaussian>{it, Gaussian()});
  CHECK(is_integral_center(t.xi1, t.levi));

  // The principal SL(2) does not commute with a regular torus.
  ArthurParameter clash{kGl2, Partition({2}), lam, lam,
                        ExtendedElement{perm_identity(2), cartan_zero(2),
                                        true}};
  CHECK_THROWS_AS(split_at_levi(clash), SL2NotInLevi);
}

TEST_CASE("orbit duality on the Levi") {
  CHECK(d_zero(Partition({2}), LeviBlocks({2})) ==
        std::vector<Partition>{Partition({1, 1})});
  CHECK(d_zero(Partition({1, 1}), LeviBlocks({2})) ==
        std::vector<Partition>{Partition({2})});
  CHECK(d_zero(Partition({1}), LeviBlocks({1})) ==
        std::vector<Partition>{Partition({1})});
  CHECK_THROWS_AS(d_zero(Partition({3}), LeviBlocks({2, 1})), BlockMismatch);
}

TEST_CASE("the duality map") {
  auto unip = [&](Partition q) {
    return ArthurParameter{kGl2, std::move(q), cartan_zero(2), cartan_zero(2),
                           ExtendedElement{perm_identity(2), cartan_zero(2),
                                           true}};
  };
  RealCoadjointDescriptor zero = duality_map(unip(Partition({2})));
  REQUIRE(zero.entries.size() == 1);
  CHECK(zero.entries[0].type == Partition({1, 1}));
  CHECK(zero.is_nilpotent());

  RealCoadjointDescriptor principal = duality_map(unip(Partition({1, 1})));
  REQUIRE(principal.entries.size() == 1);
  CHECK(principal.entries[0].type == Partition({2}));
  CHECK(principal.is_nilpotent());

  // Semisimple case: q=(1,1) with C*-part diag(it,0).
  Gaussian it(Rational(0), Rational(2));
  CartanVector lam{it, Gaussian()};
  ArthurParameter ss{kGl2, Partition({1, 1}), lam, lam,
                     ExtendedElement{perm_identity(2), cartan_zero(2), true}};
  RealCoadjointDescriptor d = duality_map(ss);
  REQUIRE(d.entries.size() == 2);
  CHECK(d.entries[0].on_x == Rational(0)); // iota of 0
  CHECK(d.entries[1].on_x == Rational(2)); // iota of it
  CHECK(d.entries[1].on_ix == Rational(0));
  CHECK_FALSE(d.is_nilpotent());
  CHECK(d.is_integral());
}

TEST_CASE("make_arthur solves for the image of j") {
  ArthurParameter ds = make_arthur(kSl2, Partition({1, 1}),
                                   CartanVector{Gaussian(Rational(3, 2)),
                                                Gaussian(Rational(-3, 2))},
                                   CartanVector{Gaussian(Rational(-3, 2)),
                                                Gaussian(Rational(3, 2))});
  CHECK_FALSE(perm_is_identity(ds.j_part.weyl));
  CHECK(classify_arthur(ds) == ArthurClass::Tempered);
  CHECK_THROWS_AS(make_arthur(kGl2, Partition({1, 1}),
                              CartanVector{Gaussian::i(), Gaussian()},
                              CartanVector{Gaussian(), Gaussian()}),
                  InvalidParameter);
}

TEST_CASE("Kirillov packet descriptors") {
  auto unip = [&](Partition q) {
    return ArthurParameter{kGl2, std::move(q), cartan_zero(2), cartan_zero(2),
                           ExtendedElement{perm_identity(2), cartan_zero(2),
                                           true}};
  };
  PacketDescriptor zero =
      kirillov_packet_descriptor(duality_map(unip(Partition({2}))));
  CHECK(zero.levi.blocks() == std::vector<int>{2});
  CHECK(zero.unipotent_labels ==
        std::vector<std::string>{"triv of G_s", "triv of G_c"});

  // Regular semisimple integral cover: torus Levi, trivial unipotent.
  RealCoadjointDescriptor rs;
  rs.ambient = 2;
  rs.entries.push_back({Rational(1), Rational(0), Partition({1})});
  rs.entries.push_back({Rational(3), Rational(0), Partition({1})});
  PacketDescriptor ps = kirillov_packet_descriptor(rs);
  CHECK(ps.levi.blocks() == std::vector<int>{1, 1});
  CHECK(ps.unipotent_labels == std::vector<std::string>{"trivial"});
  CHECK(ps.character.size() == 2);

  // Non-integral covers are rejected before the fixture lookup.
  RealCoadjointDescriptor bad = rs;
  bad.entries[0].on_ix = Rational(1, 2);
  CHECK_THROWS_AS(kirillov_packet_descriptor(bad), UnsupportedFixture);
  // The principal nilpotent of GL(2) has no fixture table.
  CHECK_THROWS_AS(
      kirillov_packet_descriptor(duality_map(unip(Partition({1, 1})))),
      UnsupportedFixture);
}
