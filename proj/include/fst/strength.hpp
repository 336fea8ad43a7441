#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fst/budget.hpp"
#include "fst/groebner.hpp"
#include "fst/polynomial.hpp"

namespace fst {

/// Nonnegative integer or +∞.
using ExtendedInt = ExtendedHeight;

/// F = Σ G_i H_i with every factor a form of degree in [1, deg F).
template <CoefficientField F>
class CollapseWitness {
 public:
  using Pair = std::pair<Form<F>, Form<F>>;

  /// Throws std::logic_error unless the pairs multiply out to the target.
  CollapseWitness(Form<F> target, std::vector<Pair> pairs) : target_(std::move(target)), pairs_(std::move(pairs)) {
    const auto& t = target_.poly();
    Polynomial<F> sum(t.field(), t.nvars());
    for (const auto& [g, h] : pairs_) {
      if (g.degree() >= target_.degree() || h.degree() >= target_.degree()) {
        throw std::logic_error("collapse witness factor of too high degree");
      }
      sum = sum + g.poly() * h.poly();
    }
    if (pairs_.empty() || !(sum == t)) throw std::logic_error("collapse witness does not multiply out to its target");
  }

  const Form<F>& target() const { return target_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t k() const { return pairs_.size(); }

 private:
  Form<F> target_;
  std::vector<Pair> pairs_;
};

/// height((F) + (𝒟F)).
template <CoefficientField F>
ExtendedHeight jacobian_height(const Form<F>& f, const Budget& budget = {}) {
  std::vector<Polynomial<F>> gens{f.poly()};
  for (auto& g : gradient(f.poly())) gens.push_back(std::move(g));
  return height(Ideal<F>(f.poly().field(), f.nvars(), std::move(gens)), budget);
}

/// ⌈h/2⌉ - 1 for h = height((F) + (𝒟F)); +∞ for linear forms. Valid over
/// every extension field.
template <CoefficientField F>
ExtendedInt strength_lower_bound(const Form<F>& f, const Budget& budget = {}) {
  auto h = jacobian_height(f, budget);
  if (h.is_infinite()) return ExtendedInt::infinite();
  return ExtendedInt((h.value() + 1) / 2 - 1);
}

/// height((F) + (𝒟F)) <= 2k, the necessary condition every k-collapse meets.
template <CoefficientField F>
bool collapse_easy_direction_holds(const CollapseWitness<F>& w, const Budget& budget = {}) {
  return jacobian_height(w.target(), budget) <= ExtendedHeight(2 * static_cast<long>(w.k()));
}

struct CollapseSearchStats {
  std::uint64_t candidates = 0;
};

/// Exhaustive search over F_p for F ∈ (G_1, ..., G_k), deg G_i in [1, deg F / 2]
/// (by the G <-> H symmetry every collapse has such a presentation). Linear
/// generators are enumerated as subspaces in reduced echelon form, higher
/// ones as forms up to scaling. The witness may use fewer than k pairs.
/// nullopt means no k-collapse exists over F_p; BudgetExceeded is thrown when
/// more than budget.max_enumeration candidates would be needed.
std::optional<CollapseWitness<PrimeField>> find_collapse(const Form<PrimeField>& f, std::size_t k,
                                                         const Budget& budget = {},
                                                         CollapseSearchStats* stats = nullptr);

struct StrengthReport {
  ExtendedInt lower{0};
  ExtendedInt upper = ExtendedInt::infinite();
  std::optional<ExtendedInt> exact;
  /// Exhaustive results hold over F_p only; the Jacobian bound and any
  /// witness are valid over every extension.
  bool field_caveat = false;
  ExtendedInt jacobian_bound{0};
  ExtendedHeight jacobian_height{0};
  std::optional<CollapseWitness<PrimeField>> witness;
  /// False when the budget or max_k stopped the search early.
  bool complete = true;
  bool budget_exceeded = false;
  std::uint64_t candidates = 0;
};

/// Least k with a (k+1)-collapse over F_p, searching k + 1 = 1, 2, ... up to
/// min(N, max_k + 1). An incomplete search returns the interval reached.
StrengthReport strength_exact(const Form<PrimeField>& f, const Budget& budget = {},
                              std::optional<std::size_t> max_k = std::nullopt);

}  // namespace fst
