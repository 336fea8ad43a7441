#include "doctest.h"
#include "fst/bounds.hpp"

using namespace fst;
using namespace fst::bounds;

TEST_SUITE("bounds") {
  TEST_CASE("threshold formula") {
    auto t = BoundTable::standard(1, 0);
    CHECK(t.base.at(3) == 14);
    CHECK(eta_A_i(DimensionSequence({0, 0, 1}), 3, t) == 14);
    CHECK(eta_A_i(DimensionSequence({0, 0, 2}), 3, t) == 17);
    CHECK(eta_A_i(DimensionSequence({5}), 1, t) == 12);
    CHECK_THROWS_AS(eta_A_i(DimensionSequence({0, 0, 0, 1}), 4, t), MissingBound);
  }

  TEST_CASE("quadric closed forms") {
    CHECK(quadric_thresholds(1, 1) == std::pair<long, long>{0, 1});
    CHECK(quadric_thresholds(3, 2) == std::pair<long, long>{2, 3});
    CHECK(quadric_thresholds(2, 3) == std::pair<long, long>{1, 3});
    CHECK(quadric_B(2) == 4);
    CHECK(quadric_B(3) == 20);
    CHECK(quadric_B(4) == 68);
    CHECK_THROWS_AS(quadric_B(70), BudgetExceeded);
  }

  TEST_CASE("cubic closed forms") {
    CHECK(cubic_eta_A(0, 0, 1, 1, 0) == std::array<long, 3>{0, 2, 14});
    CHECK(cubic_eta_A(0, 0, 1, 1, 3) == std::array<long, 3>{0, 2, 15});
    CHECK(cubic_eta_A(0, 1, 1, 1, 0) == std::array<long, 3>{0, 3, 65});
    CHECK(cubic_eta_A(0, 0, 1, 1, 2) == std::array<long, 3>{0, 2, 28});
    for (long n1 = 0; n1 < 3; ++n1) {
      for (long n2 = 0; n2 < 3; ++n2) {
        auto a = cubic_eta_A(n1, n2, 1, 2, 0), b = cubic_eta_A(n1, n2, 1, 2, 3);
        CHECK(a[0] == b[0]);
        CHECK(a[1] == b[1]);
      }
    }
  }

  TEST_CASE("phi") {
    CHECK(phi(0, 3) == 1);
    CHECK(phi(3, 3) == quadric_B(3) + 1);
    CHECK(phi(4, 2) == 5);
    CHECK(phi_euler(4, 3, 5) == 4);
    CHECK(!phi_euler(4, 3, 3));
    CHECK_THROWS_AS(phi(2, 4), MissingBound);
    for (long h = 1; h < 6; ++h) CHECK(phi(h + 1, 3) >= phi(h, 3));
  }

  TEST_CASE("recursion") {
    auto t = BoundTable::standard(1, 0);
    CHECK(B_recursion(DimensionSequence({4}), t) == 4);
    auto zero = BoundTable::fixed_thresholds({{1, 0}, {2, 0}});
    CHECK(B_recursion(DimensionSequence({0, 1}), zero) == 1);
    auto one = BoundTable::fixed_thresholds({{1, 0}, {2, 1}});
    CHECK(B_recursion(DimensionSequence({0, 1}), one) == 2);
    CHECK(B_recursion(DimensionSequence({0, 2}), one) == 4);
    CHECK(B_recursion(DimensionSequence({0, 1}), t) == 2);
    CHECK(B_recursion(DimensionSequence({1, 1}), t) >= 2);
  }

  TEST_CASE("Stillman C") {
    auto t = BoundTable::standard(1, 0);
    CHECK(stillman_C(1, 1, 1, t) == 1);
    CHECK(stillman_C(2, 3, 1, t) == 6);
    auto one = BoundTable::fixed_thresholds({{1, 0}, {2, 1}});
    RecursionStats stats;
    CHECK(stillman_C(1, 2, 2, one, {}, &stats) == 8);
    CHECK(stats.nodes > 0);
  }

  TEST_CASE("ascending on a grid") {
    for (long n = 1; n < 8; ++n) {
      CHECK(quadric_B(n + 1) >= quadric_B(n));
      for (long eta = 1; eta < 5; ++eta) {
        auto [a, b] = quadric_thresholds(n, eta);
        auto [a2, b2] = quadric_thresholds(n + 1, eta);
        auto [a3, b3] = quadric_thresholds(n, eta + 1);
        CHECK((a2 >= a && b2 >= b && a3 >= a && b3 >= b));
      }
    }
    for (long e = 1; e < 4; ++e) {
      for (long n3 = 0; n3 < 3; ++n3) {
        auto x = cubic_eta_A(0, 0, n3, e, 0), y = cubic_eta_A(0, 0, n3 + 1, e, 0), z = cubic_eta_A(0, 0, n3, e + 1, 0);
        for (int i = 0; i < 3; ++i) CHECK((y[i] >= x[i] && z[i] >= x[i]));
      }
    }
    auto t = BoundTable::standard(2, 0);
    CHECK(B_recursion(DimensionSequence({1, 1}), t) >= DimensionSequence({1, 1}).total());
  }

  TEST_CASE("table validation") {
    auto bad = BoundTable::fixed_thresholds({{1, 3}, {2, 1}});
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
    BoundTable low;
    low.base = {{3, 1}};
    CHECK_THROWS_AS(low.validate(), PreconditionError);
    CHECK_NOTHROW(BoundTable::standard(1, 0).validate());
  }
}
