#include "fst/kernels.hpp"

namespace fst::kernels::scalar {

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a, std::uint32_t p) {
  const std::size_t n = y.size() < x.size() ? y.size() : x.size();
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(a) * x[i]) % p);
  }
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p) {
  for (auto& v : y) v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * v % p);
}

}  // namespace fst::kernels::scalar
