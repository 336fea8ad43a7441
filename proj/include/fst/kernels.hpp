#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Mod-p vector kernels used by dense row reduction over F_p. Each kernel has a
// scalar reference and an AVX2 variant; the dispatching entry points pick one
// at runtime.
namespace fst::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Best ISA supported by the running CPU.
Isa detected_isa();
/// ISA the dispatchers currently use (detected, unless overridden).
Isa active_isa();
/// Forces an ISA; requesting one the CPU lacks falls back to scalar.
void set_isa_override(Isa isa);
void clear_isa_override();

/// Largest modulus the vector paths accept; larger p always runs scalar.
inline constexpr std::uint32_t kMaxVectorModulus = 65535;

// y[i] = (y[i] + a * x[i]) mod p. Inputs are canonical residues.
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a, std::uint32_t p);
// y[i] = (a * y[i]) mod p.
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
bool compiled();
// Require p <= kMaxVectorModulus and a CPU with AVX2.
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);
}  // namespace avx2

}  // namespace fst::kernels
