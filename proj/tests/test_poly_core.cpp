#include <map>

#include "doctest.h"
#include "fst/graded_space.hpp"
#include "support.hpp"

using namespace fst;
using fst::testing::P;

namespace {

// Dense reference: exponent vector -> coefficient mod p.
using Dense = std::map<std::vector<int>, std::int64_t>;

Dense dense(const Polynomial<PrimeField>& f) {
  Dense d;
  for (const auto& t : f.terms()) {
    std::vector<int> e(f.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono[i];
    d[e] = t.coeff;
  }
  return d;
}

Dense normalize(Dense d, std::int64_t p) {
  Dense out;
  for (auto& [e, c] : d) {
    c = ((c % p) + p) % p;
    if (c) out[e] = c;
  }
  return out;
}

Dense dense_mul(const Dense& a, const Dense& b, std::int64_t p) {
  Dense out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      auto e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] = (out[e] + ca * cb) % p;
    }
  }
  return normalize(out, p);
}

Dense dense_add(Dense a, const Dense& b, std::int64_t p) {
  for (const auto& [e, c] : b) a[e] += c;
  return normalize(a, p);
}

}  // namespace

TEST_SUITE("poly-core") {
  TEST_CASE("parse and print round trip") {
    PrimeField k(5);
    auto f = P(k, 3, "x1^2*x2 + 3*x3 - 1");
    CHECK(f.to_string() == "x1^2*x2 - 2*x3 - 1");
    CHECK(P(k, 3, f.to_string()) == f);
    RationalField q;
    auto g = P(q, 2, "2*x1 - 7*x2^3");
    CHECK(P(q, 2, g.to_string()) == g);
  }

  TEST_CASE("parse errors carry a position") {
    PrimeField k(5);
    CHECK_THROWS_AS(P(k, 2, "x1 + + x2"), ParseError);
    CHECK_THROWS_AS(P(k, 2, "x3"), ParseError);
    try {
      P(k, 2, "x1 * y");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() > 0);
    }
  }

  TEST_CASE("partial derivatives") {
    CHECK(partial_derivative(P(5, 2, "x1^2*x2"), 0) == P(5, 2, "2*x1*x2"));
    CHECK(partial_derivative(P(2, 2, "x1^2"), 0).is_zero());
    auto f = P(5, 2, "x1^3 + x2^3");
    auto g = gradient(f);
    auto euler = P(5, 2, "x1") * g[0] + P(5, 2, "x2") * g[1];
    CHECK(euler == f.scaled(3));
  }

  TEST_CASE("derivative space") {
    CHECK(derivative_space(P(5, 4, "x1*x2 + x3*x4")).size() == 4);
    CHECK(derivative_space(P(5, 2, "x1^5")).empty());
    auto lin = derivative_space(P(5, 2, "x1"));
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].is_unit());
  }

  TEST_CASE("jacobian") {
    auto j = jacobian(fst::testing::forms(5, 2, {"x1^2", "x1*x2"}));
    REQUIRE(j.size() == 2);
    CHECK(j[0][0] == P(5, 2, "2*x1"));
    CHECK(j[0][1].is_zero());
    CHECK(j[1][0] == P(5, 2, "x2"));
    CHECK(j[1][1] == P(5, 2, "x1"));
    auto id = jacobian(fst::testing::forms(5, 3, {"x1", "x2"}));
    CHECK(id[0][0].is_unit());
    CHECK(id[0][1].is_zero());
    CHECK(id[1][1].is_unit());
  }

  TEST_CASE("homogenize and leading form") {
    CHECK(homogenize(P(5, 2, "x1^2 + x2")).poly() == P(5, 3, "x1^2 + x2*x3"));
    CHECK(homogenize(P(5, 2, "x1*x2")).poly() == P(5, 3, "x1*x2"));
    CHECK(homogenize(P(5, 1, "1 + x1")).poly() == P(5, 2, "x1 + x2"));
    CHECK_THROWS_AS(homogenize(P(5, 1, "3")), PreconditionError);
    CHECK(leading_form(P(5, 2, "x1^2 + x2")) == P(5, 2, "x1^2"));
    CHECK(leading_form(P(5, 2, "x1*x2 + x1 + 1")) == P(5, 2, "x1*x2"));
    CHECK(leading_form(P(5, 2, "x1*x2 + x2^2")) == P(5, 2, "x1*x2 + x2^2"));
  }

  TEST_CASE("forms reject non-forms") {
    CHECK_THROWS_AS(Form<PrimeField>(P(5, 2, "0")), PreconditionError);
    CHECK_THROWS_AS(Form<PrimeField>(P(5, 2, "x1 + x2^2")), PreconditionError);
    CHECK_THROWS_AS(Form<PrimeField>(P(5, 2, "4")), PreconditionError);
  }

  TEST_CASE("arithmetic against a dense reference") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 5u, 7u, 101u}) {
      PrimeField k(p);
      for (int trial = 0; trial < 40; ++trial) {
        auto a = fst::testing::random_poly(k, 3, 3, rng);
        auto b = fst::testing::random_poly(k, 3, 3, rng);
        CHECK(dense(a * b) == dense_mul(dense(a), dense(b), p));
        CHECK(dense(a + b) == dense_add(dense(a), dense(b), p));
        CHECK((a - a).is_zero());
      }
    }
  }

  TEST_CASE("product rule, homogenize round trip, multiplicative leading forms") {
    std::mt19937_64 rng(12);
    PrimeField k(7);
    for (int trial = 0; trial < 50; ++trial) {
      auto f = fst::testing::random_poly(k, 3, 3, rng);
      auto g = fst::testing::random_poly(k, 3, 3, rng);
      for (std::size_t i = 0; i < 3; ++i) {
        CHECK(partial_derivative(f * g, i) == f * partial_derivative(g, i) + g * partial_derivative(f, i));
      }
      if (!f.is_zero() && f.degree() > 0) CHECK(dehomogenize(homogenize(f).poly()) == f);
      if (!f.is_zero() && !g.is_zero()) CHECK(leading_form(f * g) == leading_form(f) * leading_form(g));
    }
  }

  TEST_CASE("rational coefficients are exact") {
    RationalField q;
    auto f = P(q, 2, "3*x1 + 2*x2");
    auto g = f.scaled(mpq_class(1, 3));
    CHECK(g.scaled(mpq_class(3)) == f);
    CHECK(g.monic().coefficient(Monomial::variable(2, 0)) == 1);
  }

  TEST_CASE("dimension sequences") {
    CHECK(DimensionSequence({2, 0}) == DimensionSequence({2}));
    CHECK(DimensionSequence({5, 0, 1}) < DimensionSequence({2, 1, 1}));
    CHECK(DimensionSequence({9}) < DimensionSequence({0, 1}));
    CHECK(DimensionSequence({1, 1}).to_string() == "(1,1)");
    CHECK(DimensionSequence({1, 2, 3}).total() == 6);
  }

  TEST_CASE("graded space keeps an independent basis per degree") {
    PrimeField k(3);
    GradedSpace<PrimeField> v(k, 3, {P(3, 3, "x1*x2"), P(3, 3, "x1"), P(3, 3, "2*x1*x2"), P(3, 3, "x1 + x3^2")});
    CHECK(v.dimension_sequence() == DimensionSequence({1, 2}));
    CHECK(v.contains(P(3, 3, "x1*x2 + x3^2")));
    CHECK(!v.contains(P(3, 3, "x2")));
  }
}
