#pragma once

#include <random>
#include <string>
#include <vector>

#include "fst/parse.hpp"
#include "fst/polynomial.hpp"

namespace fst::testing {

template <CoefficientField F>
Polynomial<F> P(const F& field, std::size_t n, const std::string& text) {
  return parse_polynomial(text, field, n);
}

inline Polynomial<PrimeField> P(std::uint32_t p, std::size_t n, const std::string& text) {
  return parse_polynomial(text, PrimeField(p), n);
}

inline Form<PrimeField> Fm(std::uint32_t p, std::size_t n, const std::string& text) { return Form<PrimeField>(P(p, n, text)); }

inline std::vector<Form<PrimeField>> forms(std::uint32_t p, std::size_t n, const std::vector<std::string>& texts) {
  std::vector<Form<PrimeField>> out;
  for (const auto& t : texts) out.push_back(Fm(p, n, t));
  return out;
}

// Random homogeneous polynomial of degree d; each monomial present with
// probability `density`. May be zero.
inline Polynomial<PrimeField> random_homogeneous(const PrimeField& k, std::size_t n, unsigned d, std::mt19937_64& rng,
                                                 double density = 0.6) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<std::uint32_t> coeff(1, k.characteristic() - 1);
  std::vector<Term<PrimeField>> ts;
  for (const auto& m : monomials_of_degree(n, d)) {
    if (keep(rng)) ts.push_back({m, coeff(rng)});
  }
  return Polynomial<PrimeField>::from_terms(k, n, std::move(ts));
}

inline Form<PrimeField> random_form(const PrimeField& k, std::size_t n, unsigned d, std::mt19937_64& rng,
                                    double density = 0.6) {
  while (true) {
    auto p = random_homogeneous(k, n, d, rng, density);
    if (!p.is_zero()) return Form<PrimeField>(p);
  }
}

// Random polynomial with terms of degree <= d.
inline Polynomial<PrimeField> random_poly(const PrimeField& k, std::size_t n, unsigned d, std::mt19937_64& rng,
                                          double density = 0.3) {
  Polynomial<PrimeField> out(k, n);
  for (unsigned e = 0; e <= d; ++e) out = out + random_homogeneous(k, n, e, rng, density);
  return out;
}

}  // namespace fst::testing
