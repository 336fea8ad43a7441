#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fst {

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector over at most kMaxVars variables, with cached total degree.
/// `component` is the free-module basis index for module terms and 0 for ring
/// elements; it is ignored by degree and divisibility within one component.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint16_t>(check_nvars(nvars))) {}
  Monomial(std::size_t nvars, std::span<const int> exps);

  static Monomial variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m.set(i, 1);
    return m;
  }

  std::size_t nvars() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t component() const { return component_; }
  void set_component(std::uint32_t c) { component_ = c; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned e);

  Monomial operator*(const Monomial& o) const;
  /// this / o; caller guarantees o divides this.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  /// Degree restricted to variables in [lo, hi).
  std::uint32_t partial_degree(std::size_t lo, std::size_t hi) const;

  bool operator==(const Monomial& o) const;
  std::size_t hash() const;

  /// Text form in the x1..xN grammar, e.g. "x1^2*x3"; "1" for the unit monomial.
  std::string to_string() const;

 private:
  static std::size_t check_nvars(std::size_t n) {
    if (n > kMaxVars) throw std::length_error("too many variables (max " + std::to_string(kMaxVars) + ")");
    return n;
  }

  std::array<Exponent, kMaxVars> exps_{};
  std::uint16_t nvars_ = 0;
  std::uint32_t degree_ = 0;
  std::uint32_t component_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded reverse lexicographic comparison on exponents only: -1, 0, 1.
int grevlex_cmp(const Monomial& a, const Monomial& b);
/// grevlex restricted to variables in [lo, hi), graded by the block degree.
int grevlex_block_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi);
int lex_cmp(const Monomial& a, const Monomial& b);

/// All monomials of total degree d in n variables, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

}  // namespace fst
