#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fst/polynomial.hpp"

namespace fst {

/// Malformed input text; `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

using AnyField = std::variant<PrimeField, RationalField>;

/// "p=5" or "Q".
AnyField parse_field_spec(std::string_view spec);

/// Largest variable index used (x7 -> 7); 0 when none. Throws ParseError on
/// malformed variable names.
std::size_t max_variable_index(std::string_view text);

/// Splits on `sep`, trimming whitespace and dropping empty pieces.
std::vector<std::string> split_list(std::string_view text, char sep);
/// One polynomial per line; '#' starts a comment.
std::vector<std::string> split_lines(std::string_view text);

namespace detail {

struct RawTerm {
  mpz_class coeff;
  std::vector<std::pair<std::size_t, unsigned>> powers;  // (0-based var, exponent)
};

/// Grammar: ['+'|'-'] term (('+'|'-') term)*, term = factor ('*' factor)*,
/// factor = integer | 'x' index ['^' integer].
std::vector<RawTerm> parse_terms(std::string_view text);

}  // namespace detail

template <CoefficientField F>
Polynomial<F> parse_polynomial(std::string_view text, const F& field, std::size_t nvars) {
  std::vector<Term<F>> terms;
  for (auto& raw : detail::parse_terms(text)) {
    Monomial m(nvars);
    for (auto [v, e] : raw.powers) {
      if (v >= nvars) throw ParseError("variable x" + std::to_string(v + 1) + " outside the ring", 0);
      m.set(v, m[v] + e);
    }
    terms.push_back({m, field.from_mpz(raw.coeff)});
  }
  return Polynomial<F>::from_terms(field, nvars, std::move(terms));
}

template <CoefficientField F>
std::vector<Polynomial<F>> parse_polynomials(const std::vector<std::string>& texts, const F& field,
                                             std::size_t nvars) {
  std::vector<Polynomial<F>> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_polynomial(t, field, nvars));
  return out;
}

}  // namespace fst
