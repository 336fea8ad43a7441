#include <random>

#include "doctest.h"
#include "fst/certify.hpp"
#include "support.hpp"

using namespace fst;
using fst::testing::forms;
using fst::testing::P;

namespace {

std::vector<std::string> squares(std::size_t n) {
  std::string s;
  for (std::size_t i = 1; i <= n; ++i) s += (i > 1 ? " + x" : "x") + std::to_string(i) + "^2";
  return {s};
}

}  // namespace

TEST_SUITE("certify") {
  TEST_CASE("regular sequences") {
    CHECK(is_regular_sequence(forms(5, 4, {"x1", "x2", "x3"})));
    CHECK(!is_regular_sequence(forms(5, 2, {"x1", "x1*x2"})));
    CHECK(is_regular_sequence(forms(5, 4, {"x1*x2", "x3*x4"})));
  }

  TEST_CASE("Koszul check agrees on examples") {
    CHECK(koszul_h1_vanishes(forms(5, 4, {"x1*x2", "x3*x4"})));
    CHECK(!koszul_h1_vanishes(forms(5, 2, {"x1", "x1*x2"})));
    CHECK(koszul_h1_vanishes(forms(5, 3, {"x1", "x2", "x3"})));
  }

  TEST_CASE("singular locus codimension") {
    for (std::size_t n = 2; n <= 4; ++n) {
      auto s = singular_locus_codim(forms(5, n, squares(n)));
      CHECK(s.codim == static_cast<long>(n) - 1);
      CHECK(!s.smooth);
    }
    CHECK(singular_locus_codim(forms(5, 2, {"x1*x2"})).codim == 1);
    auto lin = singular_locus_codim(forms(5, 4, {"x1", "x2"}));
    CHECK(lin.smooth);
    CHECK(lin.codim == 2);
    CHECK_THROWS_AS(singular_locus_codim(forms(5, 2, {"x1", "x1*x2"})), PreconditionError);
  }

  TEST_CASE("R_eta checks") {
    CHECK(check_reta(forms(5, 3, squares(3)), 1).pass);
    CHECK(!check_reta(forms(5, 2, {"x1*x2"}), 1).pass);
    CHECK(check_reta(forms(5, 2, {"x1*x2"}), 0).pass);
    CHECK(check_reta(forms(5, 5, {"x1", "x2 + x3"}), 2).pass);
    CHECK(check_reta(forms(5, 4, {"x1^2 + x2*x3 + x4^2"}), 0).pass);
  }

  TEST_CASE("minors ideals") {
    PrimeField k(5);
    auto one = P(5, 3, "1"), zero = P(5, 3, "0");
    auto id = PolyMatrix<PrimeField>::from_rows(k, 3, {{one, zero}, {zero, one}});
    CHECK(minors_ideal(id, 2).is_unit());
    auto row = PolyMatrix<PrimeField>::from_rows(k, 2, {{P(5, 2, "x2"), P(5, 2, "x1")}});
    CHECK(minors_ideal(row, 1).same_as(Ideal<PrimeField>(k, 2, {P(5, 2, "x1"), P(5, 2, "x2")})));
    auto m = PolyMatrix<PrimeField>::from_rows(
        k, 3, {{P(5, 3, "x1"), P(5, 3, "x2"), P(5, 3, "x3")}, {P(5, 3, "x1^2"), P(5, 3, "x2^2"), P(5, 3, "x3^2")}});
    auto I = minors_ideal(m, 2);
    CHECK(I.generators().size() == 3);
    CHECK(I.contains(P(5, 3, "x1*x2^2 - x2*x1^2")));
    CHECK_THROWS_AS(minors_ideal(m, 3), PreconditionError);
  }

  TEST_CASE("minors height check") {
    PrimeField k(5);
    auto scalar = PolyMatrix<PrimeField>::from_rows(k, 2, {{P(5, 2, "2"), P(5, 2, "0")}});
    auto rs = minors_height_check(scalar);
    CHECK(rs.holds);
    CHECK(rs.minors_height.is_infinite());
    for (std::size_t n = 3; n <= 4; ++n) {
      std::vector<Polynomial<PrimeField>> r1, r2;
      for (std::size_t i = 1; i <= n; ++i) {
        r1.push_back(P(5, n, "x" + std::to_string(i)));
        r2.push_back(P(5, n, "x" + std::to_string(i) + "^2"));
      }
      auto rep = minors_height_check(PolyMatrix<PrimeField>::from_rows(k, n, {r1, r2}));
      CHECK(rep.b == ExtendedHeight(static_cast<long>(n)));
      CHECK(rep.holds);
    }
    auto same = PolyMatrix<PrimeField>::from_rows(k, 2, {{P(5, 2, "x1"), P(5, 2, "x2")}, {P(5, 2, "x2"), P(5, 2, "x1")}});
    CHECK_THROWS_AS(minors_height_check(same), PreconditionError);
  }

  TEST_CASE("initial segments of a regular sequence are regular") {
    std::mt19937_64 rng(41);
    PrimeField k(5);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Form<PrimeField>> fs;
      for (int i = 0; i < 3; ++i) fs.push_back(fst::testing::random_form(k, 4, 1 + (trial + i) % 2, rng, 0.5));
      if (!is_regular_sequence(fs)) continue;
      for (std::size_t c = 1; c < fs.size(); ++c) {
        CHECK(is_regular_sequence(std::vector<Form<PrimeField>>(fs.begin(), fs.begin() + c)));
      }
    }
  }
}
