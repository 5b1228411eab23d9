#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "liepack/orbits.hpp"

using namespace liepack;

TEST_CASE("iota and its inverse") {
  CHECK(iota(ComplexFunctional{}) == ImaginaryFunctional{});
  ComplexFunctional mu = {Gaussian(Rational(2, 3), Rational(1)),
                          Gaussian(Rational(-1, 2))};
  CHECK(iota_inverse(iota(mu)) == mu);
  // Rank 1: mu = k + it gives lambda(X) = it and lambda(iX) = ik.
  ImaginaryFunctional l = iota(ComplexFunctional{Gaussian(Rational(3),
                                                          Rational(5))});
  CHECK(l.on_x == std::vector<Rational>{Rational(5)});
  CHECK(l.on_ix == std::vector<Rational>{Rational(3)});

  std::mt19937 rng(77);
  std::uniform_int_distribution<int> num(-8, 8), den(1, 5), dim(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    ImaginaryFunctional lam;
    for (int k = dim(rng); k > 0; --k) {
      lam.on_x.push_back(Rational(num(rng), den(rng)));
      lam.on_ix.push_back(Rational(num(rng), den(rng)));
    }
    CHECK(iota(iota_inverse(lam)) == lam);
  }
}

TEST_CASE("central integrality") {
  CHECK(is_integral_center({Gaussian(), Gaussian()}, LeviBlocks({1, 1})));
  CHECK(is_integral_center({Gaussian(Rational(2), Rational(5))},
                           LeviBlocks({1})));
  CHECK_FALSE(is_integral_center({Gaussian(Rational(1, 2))}, LeviBlocks({1})));
  CHECK(is_integral_center({Gaussian(1), Gaussian(-3)}, LeviBlocks({2, 1})));
  CHECK_THROWS_AS(is_integral_center({Gaussian()}, LeviBlocks({1, 1})),
                  BlockMismatch);
}

TEST_CASE("bind") {
  Gaussian c(Rational(1, 3), Rational(2));
  InductionDatum same{LeviBlocks({1, 1}),
                      {Partition({1}), Partition({1})},
                      {c, c}};
  CoadjointDescriptor d = bind(same);
  REQUIRE(d.entries.size() == 1);
  CHECK(d.entries[0].first == c);
  CHECK(d.entries[0].second == Partition({2}));

  Gaussian c2(Rational(4));
  InductionDatum distinct{LeviBlocks({1, 1}),
                          {Partition({1}), Partition({1})},
                          {c, c2}};
  CHECK(bind(distinct).entries.size() == 2);

  InductionDatum full{LeviBlocks({3}), {Partition({2, 1})}, {Gaussian()}};
  CoadjointDescriptor nil = bind(full);
  REQUIRE(nil.entries.size() == 1);
  CHECK(nil.entries[0].second == Partition({2, 1}));

  InductionDatum bad{LeviBlocks({2}), {Partition({1})}, {Gaussian()}};
  CHECK_THROWS_AS(bind(bad), BlockMismatch);
}

TEST_CASE("birational rigidity by brute force") {
  for (int n = 1; n <= 6; ++n)
    CHECK(is_birationally_rigid(Partition::zero_orbit(n), n));
  CHECK_FALSE(is_birationally_rigid(Partition({2}), 2));
  CHECK_FALSE(is_birationally_rigid(Partition({2, 1}), 3));
  // In GL(n) the zero orbit is the only rigid one.
  for (int n = 2; n <= 5; ++n)
    for (const Partition &p : Partition::all_of(n))
      CHECK(is_birationally_rigid(p, n) == (p == Partition::zero_orbit(n)));
}

TEST_CASE("minimal datum") {
  CoadjointDescriptor nilpotent;
  nilpotent.ambient = 3;
  nilpotent.entries.emplace_back(Gaussian(), Partition({2, 1}));
  InductionDatum d = minimal_datum(nilpotent);
  CHECK(d.levi.blocks() == std::vector<int>{2, 1});
  CHECK(d.orbits == std::vector<Partition>{Partition({1, 1}), Partition({1})});
  CHECK(bind(d) == nilpotent);

  CoadjointDescriptor zero;
  zero.ambient = 4;
  zero.entries.emplace_back(Gaussian(), Partition::zero_orbit(4));
  CHECK(minimal_datum(zero).levi.blocks() == std::vector<int>{4});

  CoadjointDescriptor semisimple;
  semisimple.ambient = 2;
  semisimple.entries.emplace_back(Gaussian(1), Partition({1}));
  semisimple.entries.emplace_back(Gaussian(2), Partition({1}));
  InductionDatum t = minimal_datum(semisimple);
  CHECK(t.levi.blocks() == std::vector<int>{1, 1});
  CHECK(t.xi == std::vector<Gaussian>{Gaussian(1), Gaussian(2)});
}

TEST_CASE("minimal datum is the unique minimal preimage") {
  // Enumerate every datum with zero orbits (the minimal ones) binding to a
  // fixed nilpotent descriptor; exactly one Levi class must occur.
  for (int n = 1; n <= 5; ++n)
    for (const Partition &target : Partition::all_of(n)) {
      CoadjointDescriptor desc;
      desc.ambient = n;
      desc.entries.emplace_back(Gaussian(), target);
      int preimages = 0;
      for (const Partition &blocks : Partition::all_of(n)) {
        std::vector<Partition> orbits;
        for (int b : blocks.parts())
          orbits.push_back(Partition::zero_orbit(b));
        InductionDatum d{LeviBlocks(blocks.parts()), orbits,
                         std::vector<Gaussian>(orbits.size())};
        if (bind(d) == desc)
          ++preimages;
      }
      CHECK(preimages == 1);
    }
}

TEST_CASE("binding with zero center is surjective onto partitions") {
  for (int n = 1; n <= 5; ++n) {
    std::set<Partition> images;
    for_each_levi_datum(n, [&](const LeviBlocks &levi,
                               const std::vector<Partition> &orbits) {
      InductionDatum d{levi, orbits, std::vector<Gaussian>(orbits.size())};
      images.insert(bind(d).entries[0].second);
    });
    CHECK(images.size() == Partition::all_of(n).size());
  }
}
