#include <random>

#include "doctest.h"
#include "fst/strength.hpp"
#include "support.hpp"

using namespace fst;
using fst::testing::Fm;
using fst::testing::P;

namespace {

// Does f factor as a product of two forms of positive degree? Brute force
// over all candidate divisors g of degree e <= d/2 (monic up to scaling):
// f = g * h with h solved by exact division.
bool reducible_brute_force(const Form<PrimeField>& f) {
  const auto& k = f.poly().field();
  std::size_t n = f.nvars();
  for (unsigned e = 1; e <= f.degree() / 2; ++e) {
    auto monos = monomials_of_degree(n, e);
    std::vector<std::uint32_t> c(monos.size(), 0);
    while (true) {
      std::size_t s = 0;
      while (s < c.size() && ++c[s] == k.characteristic()) c[s++] = 0;
      if (s == c.size()) break;
      std::vector<Term<PrimeField>> ts;
      for (std::size_t i = 0; i < monos.size(); ++i) {
        if (c[i]) ts.push_back({monos[i], c[i]});
      }
      auto g = Polynomial<PrimeField>::from_terms(k, n, ts);
      // Try every h of complementary degree would be expensive; divide.
      auto q = groebner_basis<PrimeField>({g});
      if (normal_form(f.poly(), q).is_zero()) return true;
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("strength") {
  TEST_CASE("collapse examples") {
    auto sq = find_collapse(Fm(5, 2, "x1^2"), 1);
    REQUIRE(sq);
    CHECK(sq->k() == 1);
    CHECK(!find_collapse(Fm(5, 2, "x1"), 3));
    auto f = Fm(2, 4, "x1*x2 + x3*x4");
    CHECK(!find_collapse(f, 1));
    auto w = find_collapse(f, 2);
    REQUIRE(w);
    CHECK(w->k() == 2);
    CHECK(!find_collapse(f, 0));
  }

  TEST_CASE("witnesses are verified on construction") {
    auto g = Fm(5, 2, "x1"), h = Fm(5, 2, "x2");
    CHECK_NOTHROW(CollapseWitness<PrimeField>(Fm(5, 2, "x1*x2"), {{g, h}}));
    CHECK_THROWS_AS(CollapseWitness<PrimeField>(Fm(5, 2, "x1*x2 + x2^2"), {{g, h}}), std::logic_error);
  }

  TEST_CASE("exact strength") {
    auto r0 = strength_exact(Fm(5, 2, "x1^2"));
    REQUIRE(r0.exact);
    CHECK(*r0.exact == ExtendedInt(0));
    CHECK(r0.field_caveat);
    auto r1 = strength_exact(Fm(2, 4, "x1*x2 + x3*x4"));
    REQUIRE(r1.exact);
    CHECK(*r1.exact == ExtendedInt(1));
    REQUIRE(r1.witness);
    CHECK(r1.witness->k() == 2);
    auto lin = strength_exact(Fm(3, 3, "x1 + x2"));
    REQUIRE(lin.exact);
    CHECK(lin.exact->is_infinite());
    CHECK(lin.upper.is_infinite());
  }

  TEST_CASE("Jacobian lower bound") {
    CHECK(strength_lower_bound(Fm(5, 4, "x1*x2 + x3*x4")) == ExtendedInt(1));
    CHECK(jacobian_height(Fm(5, 4, "x1*x2 + x3*x4")) == ExtendedHeight(4));
    CHECK(strength_lower_bound(Fm(5, 2, "x1^2")) == ExtendedInt(0));
    CHECK(strength_lower_bound(Fm(5, 2, "x1 + 2*x2")).is_infinite());
    RationalField q;
    CHECK(strength_lower_bound(Form<RationalField>(P(q, 4, "x1*x2 - x3*x4"))) == ExtendedInt(1));
  }

  TEST_CASE("budget is reported, not answered") {
    Budget tiny;
    tiny.max_enumeration = 2;
    CHECK_THROWS_AS(find_collapse(Fm(3, 4, "x1*x2 + x3*x4"), 2, tiny), BudgetExceeded);
    auto r = strength_exact(Fm(3, 4, "x1*x2 + x3*x4"), tiny);
    CHECK(!r.complete);
    CHECK(!r.exact);
    CHECK(r.lower <= r.upper);
  }

  TEST_CASE("max_k leaves an interval") {
    auto r = strength_exact(Fm(3, 4, "x1*x2 + x3*x4"), {}, 0);
    CHECK(!r.complete);
    CHECK(r.lower == ExtendedInt(1));
    CHECK(r.upper == ExtendedInt(3));
  }

  TEST_CASE("quartics use quadratic generators") {
    // (x1^2 + x2^2)(x3^2 + x4^2) over F3: a 1-collapse by quadrics.
    auto f = Form<PrimeField>(P(3, 4, "x1^2 + x2^2") * P(3, 4, "x3^2 + x4^2"));
    auto w = find_collapse(f, 1);
    REQUIRE(w);
    CHECK(w->pairs()[0].first.degree() == 2);
  }

  TEST_CASE("irreducibility matches brute-force factorization") {
    std::mt19937_64 rng(31);
    for (std::uint32_t p : {2u, 3u}) {
      PrimeField k(p);
      for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + trial % 3;
        unsigned d = 2 + trial % 2;
        auto f = fst::testing::random_form(k, n, d, rng);
        bool collapses = find_collapse(f, 1).has_value();
        CHECK(collapses == reducible_brute_force(f));
      }
    }
  }

  TEST_CASE("witness consistency and monotone enumeration") {
    std::mt19937_64 rng(32);
    PrimeField k(3);
    for (int trial = 0; trial < 20; ++trial) {
      auto f = fst::testing::random_form(k, 3, 2 + trial % 2, rng);
      auto r = strength_exact(f);
      REQUIRE(r.exact);
      CHECK(r.jacobian_bound <= *r.exact);
      REQUIRE(r.witness);
      CHECK(collapse_easy_direction_holds(*r.witness));
      auto k1 = static_cast<std::size_t>(r.exact->value() + 1);
      CHECK(find_collapse(f, k1 + 1).has_value());
      if (k1 > 1) CHECK(!find_collapse(f, k1 - 1).has_value());
    }
  }
}
