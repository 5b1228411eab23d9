#include <catch2/catch_amalgamated.hpp>

#include "liepack/report.hpp"
#include "liepack/selftest.hpp"

using namespace liepack;

TEST_CASE("reports render deterministically") {
  BasedRootDatum pgl2 = BasedRootDatum::pgl(2);
  Report r = params_enumerate_report(pgl2, Gaussian(Rational(1, 2)));
  CHECK(r.human() == r.human());
  CHECK(r.machine_block() == r.machine_block());
  CHECK(r.render(true) == r.machine_block());
  CHECK(r.render(false) == r.human() + r.machine_block());
}

TEST_CASE("enumeration report carries the full table") {
  Report r =
      params_enumerate_report(BasedRootDatum::pgl(2), Gaussian(Rational(1, 2)));
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0][0] == "diag(1/2,-1/2)");
  CHECK(r.rows[0][1] == "diag(i,-i).delta");
  CHECK(r.rows[2][1] == "antidiag(1,-1).delta");
  CHECK(r.rows[2][4] == "{+-Id}");
  // Machine block repeats every cell.
  std::string m = r.machine_block();
  for (const auto &row : r.rows)
    for (const std::string &cell : row)
      if (cell != "-")
        CHECK(m.find(cell) != std::string::npos);
}

TEST_CASE("stratification report lists strata and complete parameters") {
  StratumPoset poset = stratify_orbit(BasedRootDatum::pgl(2), rho_vector(2));
  Report r = geo_stratify_report(poset);
  REQUIRE(r.rows.size() == 4); // three strata plus the completion row
  CHECK(r.rows[0][0] == "N");
  CHECK(r.rows[2][0] == "U");
  CHECK(r.rows[2][2] == "Z/2");
  CHECK(r.rows[2][3] == "N,S");
  CHECK(r.rows[3][1] == "(N,triv) (S,triv) (U,triv) (U,sgn)");
}

TEST_CASE("matrix reports expose the legend and entries") {
  StratumPoset poset = stratify_orbit(BasedRootDatum::pgl(2), rho_vector(2));
  Report mg = kgroup_matrix_report(poset, true);
  CHECK(mg.has_matrix);
  CHECK(mg.legend ==
        std::vector<std::string>{"(N,triv)", "(S,triv)", "(U,triv)",
                                 "(U,sgn)"});
  CHECK(mg.matrix == IntMatrix{{1, 0, 0, 0},
                               {0, 1, 0, 0},
                               {1, 1, 1, 0},
                               {0, 0, 0, 1}});
  Report mr = kgroup_matrix_report(poset, false);
  CHECK(mr.matrix == IntMatrix{{1, 0, 1, 0},
                               {0, 1, 1, 0},
                               {0, 0, 1, 0},
                               {0, 0, 0, 1}});
}

TEST_CASE("unipotent packet reports") {
  Report plus = unipotent_packet_report(true);
  REQUIRE(plus.rows.size() == 2);
  CHECK(plus.rows[0] == std::vector<std::string>{"(N,triv)", "triv of G_s"});
  CHECK(plus.rows[1] == std::vector<std::string>{"(U,sgn)", "triv of G_c"});
  Report minus = unipotent_packet_report(false);
  REQUIRE(minus.rows.size() == 2);
  CHECK(minus.rows[0] == std::vector<std::string>{"(S,triv)", "sgn of G_s"});
  CHECK(minus.rows[1] == std::vector<std::string>{"(U,sgn)", "triv of G_c"});
}

TEST_CASE("duality reports") {
  ArthurParameter psi{BasedRootDatum::gl(2), Partition({2}), cartan_zero(2),
                      cartan_zero(2),
                      ExtendedElement{perm_identity(2), cartan_zero(2), true}};
  Report r = duality_map_report(psi);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0][0] == "(0,0)");
  CHECK(r.rows[0][1] == "(1,1)");
  std::string m = r.machine_block();
  CHECK(m.find("nilpotent: yes") != std::string::npos);
  CHECK(m.find("class: unipotent") != std::string::npos);

  Report s = duality_split_report(psi);
  REQUIRE(s.rows.size() == 1);
  CHECK(s.rows[0] == std::vector<std::string>{"2", "(2)", "0"});
}

TEST_CASE("the combined rank-1 walkthrough has all sections") {
  std::vector<Report> all = report_pgl2_all();
  REQUIRE(all.size() == 7);
  CHECK(all[0].title.find("Langlands parameters") == 0);
  CHECK(all[2].has_matrix);
  CHECK(all[3].has_matrix);
  CHECK(all[5].title == "Arthur packet of psi+");
  CHECK(all[6].title == "Arthur packet of psi-");
  for (const Report &r : all) {
    CHECK_FALSE(r.machine.empty());
    CHECK_FALSE(r.human().empty());
  }
}

TEST_CASE("the acceptance self-checks all pass") {
  for (const auto &[name, ok] : selftest::run_all()) {
    INFO(name);
    CHECK(ok);
  }
}
