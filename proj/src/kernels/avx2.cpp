#include "fst/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define FST_HAVE_AVX2_TU 1
#endif

namespace fst::kernels::avx2 {

#ifdef FST_HAVE_AVX2_TU

namespace {

// Barrett reduction of 8 lanes s < 2^32 by p <= 65535, with m = floor(2^32 / p):
// q = (s * m) >> 32 underestimates s / p by at most one, so one conditional
// subtraction finishes the job.
__attribute__((target("avx2"))) inline __m256i reduce(__m256i s, __m256i m, __m256i pv) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(s, m), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(s, 32), m);
  __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  __m256i r = _mm256_sub_epi32(s, _mm256_mullo_epi32(q, pv));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
}

}  // namespace

bool compiled() { return true; }

__attribute__((target("avx2"))) void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
                                              std::uint32_t a, std::uint32_t p) {
  const std::size_t n = y.size() < x.size() ? y.size() : x.size();
  const auto barrett = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i av = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i mv = _mm256_set1_epi32(static_cast<int>(barrett));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    __m256i s = _mm256_add_epi32(_mm256_mullo_epi32(xv, av), yv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), reduce(s, mv, pv));
  }
  for (; i < n; ++i) y[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(a) * x[i]) % p);
}

__attribute__((target("avx2"))) void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p) {
  const std::size_t n = y.size();
  const auto barrett = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i av = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i mv = _mm256_set1_epi32(static_cast<int>(barrett));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), reduce(_mm256_mullo_epi32(yv, av), mv, pv));
  }
  for (; i < n; ++i) y[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * y[i] % p);
}

#else

bool compiled() { return false; }
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a, std::uint32_t p) {
  scalar::axpy_mod(y, x, a, p);
}
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p) { scalar::scale_mod(y, a, p); }

#endif

}  // namespace fst::kernels::avx2
