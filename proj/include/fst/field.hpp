#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fst {

/// Thrown when an operation's precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// Z/pZ for a prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;
  static constexpr bool is_finite = true;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) {
      throw PreconditionError("field characteristic must be a prime below 2^31: " + std::to_string(p));
    }
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint64_t size() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    // Extended Euclid on signed 64-bit.
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<value_type>(t);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }
  value_type from_index(std::uint64_t i) const { return static_cast<value_type>(i % p_); }
  value_type from_mpz(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r.get_ui());
  }

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(value_type a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }
  bool is_negative(value_type a) const { return to_signed(a) < 0; }
  std::string to_string(value_type a) const { return std::to_string(to_signed(a)); }
  std::string name() const { return "F_" + std::to_string(p_); }
  std::string spec() const { return "p=" + std::to_string(p_); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

/// The rational numbers, exact via GMP.
class RationalField {
 public:
  using value_type = mpq_class;
  static constexpr bool is_finite = false;

  std::uint32_t characteristic() const { return 0; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero in Q");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return a * inv(b); }

  value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  value_type from_index(std::uint64_t i) const { return mpq_class(static_cast<unsigned long>(i)); }
  value_type from_mpz(const mpz_class& v) const { return mpq_class(v); }

  bool is_negative(const value_type& a) const { return sgn(a) < 0; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
  std::string spec() const { return "Q"; }

  bool operator==(const RationalField&) const { return true; }
};

template <class F>
concept CoefficientField = requires(const F& f, typename F::value_type a) {
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
};

}  // namespace fst
