#include <random>

#include "doctest.h"
#include "fst/kernels.hpp"
#include "fst/linalg.hpp"
#include "support.hpp"

using namespace fst;

namespace {

std::vector<std::uint32_t> random_residues(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar axpy and scale match the definition") {
    std::vector<std::uint32_t> y{1, 2, 3, 4}, x{4, 4, 4, 4};
    kernels::scalar::axpy_mod(y, x, 3, 5);
    CHECK(y == std::vector<std::uint32_t>{3, 4, 0, 1});
    kernels::scalar::scale_mod(y, 2, 5);
    CHECK(y == std::vector<std::uint32_t>{1, 3, 0, 2});
  }

  TEST_CASE("avx2 variants agree with scalar") {
    if (!kernels::avx2::compiled() || kernels::detected_isa() != kernels::Isa::avx2) {
      MESSAGE("AVX2 unavailable; skipping vector equivalence");
      return;
    }
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u, 32749u, 65521u}) {
      for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 257u}) {
        auto x = random_residues(n, p, rng);
        auto y = random_residues(n, p, rng);
        std::uint32_t a = random_residues(1, p, rng)[0];
        auto ys = y, yv = y;
        kernels::scalar::axpy_mod(ys, x, a, p);
        kernels::avx2::axpy_mod(yv, x, a, p);
        CHECK(ys == yv);
        kernels::scalar::scale_mod(ys, a, p);
        kernels::avx2::scale_mod(yv, a, p);
        CHECK(ys == yv);
      }
      // Extreme residues.
      std::vector<std::uint32_t> y(33, p - 1), x(33, p - 1);
      auto ys = y, yv = y;
      kernels::scalar::axpy_mod(ys, x, p - 1, p);
      kernels::avx2::axpy_mod(yv, x, p - 1, p);
      CHECK(ys == yv);
    }
  }

  TEST_CASE("dispatch honours overrides and large moduli") {
    kernels::set_isa_override(kernels::Isa::scalar);
    CHECK(kernels::active_isa() == kernels::Isa::scalar);
    kernels::clear_isa_override();
    CHECK(kernels::active_isa() == kernels::detected_isa());
    std::vector<std::uint32_t> y{1000000006u}, x{2};
    kernels::axpy_mod(y, x, 3, 1000000007u);
    CHECK(y[0] == 5);
  }

  TEST_CASE("rank is independent of the active kernel") {
    std::mt19937_64 rng(4);
    PrimeField k(7);
    for (int trial = 0; trial < 20; ++trial) {
      linalg::Matrix<PrimeField> m(k, 12, 20);
      for (std::size_t r = 0; r < 12; ++r) {
        auto row = random_residues(20, 7, rng);
        for (std::size_t c = 0; c < 20; ++c) m.at(r, c) = row[c];
      }
      // Force dependencies.
      for (std::size_t c = 0; c < 20; ++c) m.at(11, c) = k.add(m.at(0, c), m.at(1, c));
      kernels::set_isa_override(kernels::Isa::scalar);
      auto rs = linalg::rank(m);
      kernels::clear_isa_override();
      auto rv = linalg::rank(m);
      CHECK(rs == rv);
      CHECK(rs <= 11);
    }
  }
}
