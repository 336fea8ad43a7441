#include "doctest.h"
#include "fst/certify.hpp"
#include "fst/descent.hpp"
#include "support.hpp"

using namespace fst;
using fst::testing::Fm;
using fst::testing::P;

namespace {

GradedSpace<PrimeField> space(std::uint32_t p, std::size_t n, const std::vector<std::string>& texts) {
  std::vector<Polynomial<PrimeField>> v;
  for (const auto& t : texts) v.push_back(P(p, n, t));
  return GradedSpace<PrimeField>(PrimeField(p), n, v);
}

std::vector<Polynomial<PrimeField>> polys(const std::vector<Form<PrimeField>>& fs) {
  std::vector<Polynomial<PrimeField>> out;
  for (const auto& f : fs) out.push_back(f.poly());
  return out;
}

}  // namespace

TEST_SUITE("descent") {
  TEST_CASE("sequence order") {
    CHECK(compare_sequences(DimensionSequence({5, 0, 1}), DimensionSequence({2, 1, 1})) < 0);
    CHECK(compare_sequences(DimensionSequence({1, 1}), DimensionSequence({1, 1})) == 0);
    CHECK(compare_sequences(DimensionSequence({9}), DimensionSequence({0, 1})) < 0);
  }

  TEST_CASE("subalgebra membership") {
    CHECK(subalgebra_membership(P(5, 2, "x1 + x2").pow(2), {P(5, 2, "x1 + x2")}));
    CHECK(!subalgebra_membership(P(5, 2, "x1"), {P(5, 2, "x1^2")}));
    CHECK(subalgebra_membership(P(5, 2, "x1*x2"), {P(5, 2, "x1 + x2"), P(5, 2, "x1 - x2")}));
    CHECK(!subalgebra_membership(P(2, 2, "x1*x2"), {P(2, 2, "x1 + x2"), P(2, 2, "x1 - x2")}));
    RationalField q;
    CHECK(subalgebra_membership(P(q, 2, "x1*x2"), {P(q, 2, "x1 + x2"), P(q, 2, "x1 - x2")}));
  }

  TEST_CASE("single steps") {
    auto v = space(5, 2, {"x1*x2"});
    CollapseWitness<PrimeField> w(Fm(5, 2, "x1*x2"), {{Fm(5, 2, "x1"), Fm(5, 2, "x2")}});
    auto v1 = descend_step(v, 2, w);
    CHECK(v1.dimension_sequence() == DimensionSequence({2}));

    auto v2 = space(5, 3, {"x1^2", "x3^3"});
    CollapseWitness<PrimeField> w2(Fm(5, 3, "x1^2"), {{Fm(5, 3, "x1"), Fm(5, 3, "x1")}});
    auto v3 = descend_step(v2, 2, w2);
    CHECK(v3.dimension_sequence() == DimensionSequence({1, 0, 1}));

    auto v4 = space(2, 4, {"x1*x2 + x3*x4"});
    auto w4 = find_collapse(Fm(2, 4, "x1*x2 + x3*x4"), 2);
    REQUIRE(w4);
    CHECK(descend_step(v4, 2, *w4).dimension_sequence() == DimensionSequence({4}));

    CollapseWitness<PrimeField> bad(Fm(5, 2, "x2^2"), {{Fm(5, 2, "x2"), Fm(5, 2, "x2")}});
    CHECK_THROWS_AS(descend_step(v, 2, bad), PreconditionError);
  }

  TEST_CASE("constant threshold descends reducible quadrics") {
    auto t = small_subalgebra(space(5, 2, {"x1*x2"}), ThresholdPolicy::constant(1));
    CHECK(t.complete);
    CHECK(t.final_generators.size() == 2);
    CHECK(t.all_members);
    CHECK(t.regular_sequence == true);
  }

  TEST_CASE("irreducible quadric stays") {
    auto t = small_subalgebra(space(3, 2, {"x1^2 + x2^2"}), ThresholdPolicy::constant(1));
    CHECK(t.steps.empty());
    CHECK(t.exhaustive);
    REQUIRE(t.final_generators.size() == 1);
    CHECK(t.final_generators[0].poly() == P(3, 2, "x1^2 + x2^2"));
    // Over F5 the same quadric splits.
    auto t5 = small_subalgebra(space(5, 2, {"x1^2 + x2^2"}), ThresholdPolicy::constant(1));
    CHECK(t5.steps.size() == 1);
  }

  TEST_CASE("mixed degrees") {
    auto t = small_subalgebra(space(3, 2, {"x1", "x1^2 + x1*x2"}), ThresholdPolicy::constant(1));
    CHECK(t.final_generators.size() == 2);
    CHECK(polys(t.final_generators) == std::vector<Polynomial<PrimeField>>{P(3, 2, "x1"), P(3, 2, "x1 + x2")});
    CHECK(t.all_members);
  }

  TEST_CASE("maximal policy ends in a regular sequence") {
    auto t = small_subalgebra(space(2, 3, {"x1", "x1^2"}), ThresholdPolicy{});
    CHECK(t.complete);
    CHECK(t.regular_sequence == true);
    CHECK(t.all_members);
    auto t2 = small_subalgebra(space(2, 4, {"x1*x2 + x3*x4", "x1*x3"}), ThresholdPolicy{});
    CHECK(t2.regular_sequence == true);
    CHECK(t2.all_members);
    for (std::size_t s = 0; s < t2.steps.size(); ++s) CHECK(t2.steps[s].after < t2.steps[s].before);
  }

  TEST_CASE("eta-derived thresholds") {
    auto t = small_subalgebra(space(2, 3, {"x1*x2 + x3^2"}), ThresholdPolicy::eta(bounds::BoundTable::standard(1, 2)));
    CHECK(t.all_members);
    CHECK(t.final_generators.size() <= 3);
  }
}
