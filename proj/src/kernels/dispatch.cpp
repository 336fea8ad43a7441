#include <atomic>

#include "fst/kernels.hpp"

namespace fst::kernels {

namespace {

constexpr int kNoOverride = -1;
std::atomic<int> g_override{kNoOverride};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool has = __builtin_cpu_supports("avx2");
  return has && avx2::compiled();
#else
  return false;
#endif
}

bool use_vector(std::uint32_t p) { return p <= kMaxVectorModulus && active_isa() == Isa::avx2; }

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detected_isa() { return cpu_has_avx2() ? Isa::avx2 : Isa::scalar; }

Isa active_isa() {
  int o = g_override.load(std::memory_order_relaxed);
  if (o == kNoOverride) return detected_isa();
  auto forced = static_cast<Isa>(o);
  return forced == Isa::avx2 && !cpu_has_avx2() ? Isa::scalar : forced;
}

void set_isa_override(Isa isa) { g_override.store(static_cast<int>(isa), std::memory_order_relaxed); }
void clear_isa_override() { g_override.store(kNoOverride, std::memory_order_relaxed); }

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a, std::uint32_t p) {
  if (use_vector(p)) {
    avx2::axpy_mod(y, x, a, p);
  } else {
    scalar::axpy_mod(y, x, a, p);
  }
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p) {
  if (use_vector(p)) {
    avx2::scale_mod(y, a, p);
  } else {
    scalar::scale_mod(y, a, p);
  }
}

}  // namespace fst::kernels
