#include <random>

#include "doctest.h"
#include "fst/groebner.hpp"
#include "fst/module.hpp"
#include "support.hpp"

using namespace fst;
using fst::testing::P;

namespace {

using Poly = Polynomial<PrimeField>;

Ideal<PrimeField> I(std::uint32_t p, std::size_t n, const std::vector<std::string>& gens) {
  std::vector<Poly> g;
  for (const auto& s : gens) g.push_back(P(p, n, s));
  return Ideal<PrimeField>(PrimeField(p), n, g);
}

bool contains_poly(const std::vector<Poly>& v, const Poly& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

// Every S-polynomial and every generator reduces to zero.
bool is_groebner(const std::vector<Poly>& gens, const std::vector<Poly>& basis, const MonomialOrder& order) {
  for (const auto& g : gens) {
    if (!normal_form(g, basis, order).is_zero()) return false;
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto mi = leading_monomial(basis[i], order), mj = leading_monomial(basis[j], order);
      auto l = mi.lcm(mj);
      const auto& k = basis[i].field();
      auto ci = basis[i].coefficient(mi), cj = basis[j].coefficient(mj);
      auto s = basis[i].times_monomial(l / mi, k.inv(ci)) - basis[j].times_monomial(l / mj, k.inv(cj));
      if (!normal_form(s, basis, order).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("small bases") {
    PrimeField k(5);
    auto b1 = groebner_basis<PrimeField>({P(5, 3, "x1")});
    CHECK(b1 == std::vector<Poly>{P(5, 3, "x1")});
    auto b2 = groebner_basis<PrimeField>({P(5, 3, "x1*x2"), P(5, 3, "x1*x3")});
    CHECK(b2.size() == 2);
    CHECK(contains_poly(b2, P(5, 3, "x1*x2")));
    CHECK(contains_poly(b2, P(5, 3, "x1*x3")));
    auto b3 = groebner_basis<PrimeField>({P(5, 2, "x1^2 + x2^2"), P(5, 2, "x1*x2")});
    CHECK(contains_poly(b3, P(5, 2, "x2^3")));
  }

  TEST_CASE("random bases satisfy the Buchberger criterion") {
    std::mt19937_64 rng(21);
    PrimeField k(7);
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::eliminate_first(1)}) {
      for (int trial = 0; trial < 15; ++trial) {
        std::vector<Poly> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(fst::testing::random_poly(k, 3, 2, rng, 0.4));
        auto b = groebner_basis(gens, order);
        CHECK(is_groebner(gens, b, order));
      }
    }
  }

  TEST_CASE("rational Gröbner bases") {
    RationalField q;
    auto b = groebner_basis<RationalField>({P(q, 2, "x1^2 + x2^2"), P(q, 2, "x1*x2")});
    CHECK(std::find(b.begin(), b.end(), P(q, 2, "x2^3")) != b.end());
    Ideal<RationalField> J(q, 3, {P(q, 3, "2*x1 - 3*x2"), P(q, 3, "x2*x3 - 1")});
    CHECK(J.contains(P(q, 3, "2*x1*x3 - 3")));
  }

  TEST_CASE("budget is a distinguished error") {
    Budget tight;
    tight.max_pairs = 1;
    std::vector<Poly> gens{P(7, 3, "x1^2 + x2*x3"), P(7, 3, "x2^2 + x1*x3"), P(7, 3, "x3^2 + x1*x2 + x1")};
    CHECK_THROWS_AS(groebner_basis(gens, MonomialOrder{}, tight), BudgetExceeded);
  }

  TEST_CASE("dimension and height") {
    CHECK(ideal_dimension(I(5, 5, {"x1", "x2"})) == 3);
    CHECK(ideal_dimension(I(5, 2, {"x1*x2"})) == 1);
    CHECK(ideal_dimension(I(5, 3, {"x1*x2", "x1*x3", "x2*x3"})) == 1);
    CHECK(ideal_dimension(I(5, 3, {"x1 + 1", "x1"})) == -1);
    CHECK(height(I(5, 4, {"x1", "x2", "x3"})) == ExtendedHeight(3));
    CHECK(height(I(5, 2, {"3"})).is_infinite());
    CHECK(height(I(5, 4, {"x1*x2", "x3*x4"})) == ExtendedHeight(2));
    CHECK(height(Ideal<PrimeField>(PrimeField(5), 3)) == ExtendedHeight(0));
  }

  TEST_CASE("height plus dimension is N on random monomial and binomial ideals") {
    std::mt19937_64 rng(22);
    PrimeField k(5);
    std::uniform_int_distribution<int> e(0, 2);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Poly> gens;
      for (int g = 0; g < 3; ++g) {
        Poly p(k, 4);
        for (int t = 0; t < (trial % 2 ? 2 : 1); ++t) {
          Monomial m(4);
          for (std::size_t i = 0; i < 4; ++i) m.set(i, e(rng));
          if (m.is_one()) m.set(0, 1);
          p = p + Poly::monomial(k, m, t ? k.neg(1) : 1);
        }
        gens.push_back(p);
      }
      Ideal<PrimeField> J(k, 4, gens);
      if (J.is_unit()) continue;
      CHECK(height(J).value() + ideal_dimension(J) == 4);
    }
  }

  TEST_CASE("killing a general linear form does not raise height") {
    std::mt19937_64 rng(23);
    PrimeField k(7);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Poly> gens;
      for (int i = 0; i < 2; ++i) gens.push_back(fst::testing::random_homogeneous(k, 4, 2, rng, 0.5));
      Ideal<PrimeField> J(k, 4, gens);
      // x4 -> random combination of x1..x3, then drop x4.
      std::vector<Poly> images;
      Poly l(k, 3);
      for (std::size_t i = 0; i < 3; ++i) {
        images.push_back(Poly::variable(k, 3, i));
        l = l + Poly::variable(k, 3, i).scaled(static_cast<std::uint32_t>(rng() % 7));
      }
      images.push_back(l);
      std::vector<Poly> cut;
      for (const auto& g : gens) cut.push_back(g.substitute(images));
      auto h0 = height(J), h1 = height(Ideal<PrimeField>(k, 3, cut));
      CHECK(h1 <= h0);
    }
  }

  TEST_CASE("colon, intersection, saturation") {
    CHECK(colon_ideal(I(5, 2, {"x1*x2"}), I(5, 2, {"x1"})).same_as(I(5, 2, {"x2"})));
    auto J = I(5, 3, {"x1^2 + x2", "x3*x1"});
    CHECK(colon_ideal(J, Ideal<PrimeField>::unit(PrimeField(5), 3)).same_as(J));
    CHECK(colon_ideal(I(5, 2, {"x1^2", "x1*x2"}), I(5, 2, {"x1"})).same_as(I(5, 2, {"x1", "x2"})));
    CHECK(intersection(I(5, 2, {"x1"}), I(5, 2, {"x2"})).same_as(I(5, 2, {"x1*x2"})));
    CHECK(intersection(J, J).same_as(J));
    CHECK(intersection(I(5, 3, {"x1", "x2"}), I(5, 3, {"x2", "x3"})).same_as(I(5, 3, {"x2", "x1*x3"})));
    CHECK(saturation(I(5, 3, {"x1*x2", "x1*x3"}), P(5, 3, "x1")).same_as(I(5, 3, {"x2", "x3"})));
    CHECK(saturation(J, P(5, 3, "3")).same_as(J));
    CHECK(saturation(I(5, 2, {"x1^2*x2"}), P(5, 2, "x1")).same_as(I(5, 2, {"x2"})));
  }

  TEST_CASE("saturation is idempotent; intersection and product containments") {
    std::mt19937_64 rng(24);
    PrimeField k(5);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Poly> a, b;
      for (int i = 0; i < 2; ++i) {
        a.push_back(fst::testing::random_homogeneous(k, 3, 2, rng, 0.4));
        b.push_back(fst::testing::random_homogeneous(k, 3, 1 + i, rng, 0.5));
      }
      Ideal<PrimeField> A(k, 3, a), B(k, 3, b);
      auto f = fst::testing::random_homogeneous(k, 3, 1, rng, 0.7);
      if (f.is_zero()) f = P(5, 3, "x1");
      auto s = saturation(A, f);
      CHECK(saturation(s, f).same_as(s));
      auto meet = intersection(A, B);
      CHECK(A.contains(meet));
      CHECK(B.contains(meet));
      CHECK(meet.contains(A * B));
    }
  }

  TEST_CASE("leading form ideal") {
    CHECK(leading_form_ideal<PrimeField>({P(5, 2, "x1*x2"), P(5, 2, "x1^2")}).same_as(I(5, 2, {"x1*x2", "x1^2"})));
    CHECK(leading_form_ideal<PrimeField>({P(5, 2, "x1 + 1")}).same_as(I(5, 2, {"x1"})));
    CHECK(leading_form_ideal<PrimeField>({P(5, 2, "x1"), P(5, 2, "x1*x2 + x2^2")}).same_as(I(5, 2, {"x1", "x2^2"})));
    auto f = P(5, 3, "x1^2*x2 + x3^2 + x1 + 4");
    CHECK(leading_form_ideal<PrimeField>({f}).same_as(Ideal<PrimeField>(PrimeField(5), 3, {leading_form(f)})));
  }
}

TEST_SUITE("modules") {
  using Mat = PolyMatrix<PrimeField>;
  using Sub = SubmoduleOfFree<PrimeField>;

  TEST_CASE("kernels of maps") {
    PrimeField k(5);
    auto one = P(5, 2, "1"), zero = P(5, 2, "0");
    auto id = Mat::from_rows(k, 2, {{one, zero}, {zero, one}});
    CHECK(kernel_of_map(id, Sub(k, 2, 2)).is_zero());

    auto row = Mat::from_rows(k, 2, {{P(5, 2, "x1"), P(5, 2, "x2")}});
    auto ker = kernel_of_map(row, Sub(k, 2, 1));
    REQUIRE(ker.generators().size() == 1);
    auto g = ker.generators()[0];
    CHECK((P(5, 2, "x1") * g[0] + P(5, 2, "x2") * g[1]).is_zero());
    CHECK(Ideal<PrimeField>(k, 2, g).same_as(Ideal<PrimeField>(k, 2, {P(5, 2, "x1"), P(5, 2, "x2")})));

    auto x = Mat::from_rows(k, 2, {{P(5, 2, "x1")}});
    auto ker2 = kernel_of_map(x, Sub(k, 2, 1, {{P(5, 2, "x1^2")}}));
    std::vector<Poly> entries;
    for (const auto& v : ker2.generators()) entries.push_back(v[0]);
    CHECK(Ideal<PrimeField>(k, 2, entries).same_as(Ideal<PrimeField>(k, 2, {P(5, 2, "x1")})));
  }

  TEST_CASE("Koszul resolutions") {
    for (std::size_t c = 1; c <= 4; ++c) {
      std::vector<Poly> gens;
      for (std::size_t i = 1; i <= c; ++i) gens.push_back(P(2, 4, "x" + std::to_string(i)));
      auto res = free_resolution(Sub::from_ideal(Ideal<PrimeField>(PrimeField(2), 4, gens)));
      CHECK(res.length() == c);
      CHECK(res.is_complex());
      CHECK(res.minimal);
      // ranks are binomial(c, i)
      std::size_t binom = 1;
      for (std::size_t i = 0; i <= c; ++i) {
        CHECK(res.ranks[i] == binom);
        binom = binom * (c - i) / (i + 1);
      }
    }
  }

  TEST_CASE("small resolutions") {
    PrimeField k(5);
    CHECK(projective_dimension(Sub::from_ideal(Ideal<PrimeField>(k, 3, {P(5, 3, "x1^2 + x2*x3")}))) == 1);
    auto res = free_resolution(Sub::from_ideal(Ideal<PrimeField>(k, 2, {P(5, 2, "x1^2"), P(5, 2, "x1*x2")})));
    CHECK(res.length() == 2);
    CHECK(res.ranks == std::vector<std::size_t>{1, 2, 1});
    CHECK(res.is_complex());
  }

  TEST_CASE("random resolutions are complexes within the syzygy bound") {
    std::mt19937_64 rng(25);
    PrimeField k(5);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Poly> gens;
      for (int i = 0; i < 3; ++i) gens.push_back(fst::testing::random_homogeneous(k, 3, 2, rng, 0.35));
      Ideal<PrimeField> J(k, 3, gens);
      if (J.is_zero()) continue;
      auto res = free_resolution(Sub::from_ideal(J));
      CHECK(res.is_complex());
      CHECK(res.length() <= 3);
    }
  }
}
