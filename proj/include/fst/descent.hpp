#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fst/bounds.hpp"
#include "fst/graded_space.hpp"
#include "fst/groebner.hpp"
#include "fst/strength.hpp"

namespace fst {

/// Larger iff larger at the highest degree where the two differ.
inline std::strong_ordering compare_sequences(const DimensionSequence& a, const DimensionSequence& b) { return a <=> b; }

/// Is f in K[g_1, ..., g_s]? Adjoins tag variables y_j after x, reduces f by
/// a Gröbner basis of (y_j - g_j) under an order eliminating x, and checks
/// that the normal form involves y only.
template <CoefficientField F>
bool subalgebra_membership(const Polynomial<F>& f, const std::vector<Polynomial<F>>& gens, const Budget& budget = {}) {
  if (gens.empty()) throw PreconditionError("subalgebra_membership: no generators");
  const F& k = f.field();
  std::size_t n = f.nvars(), total = n + gens.size();
  std::vector<Polynomial<F>> rel;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero()) throw PreconditionError("subalgebra_membership: zero generator");
    if (gens[j].nvars() != n) throw PreconditionError("subalgebra_membership: generator in a different ring");
    rel.push_back(Polynomial<F>::variable(k, total, n + j) - gens[j].embed(total));
  }
  auto order = MonomialOrder::eliminate_first(n);
  auto nf = normal_form(f.embed(total), groebner_basis(rel, order, budget), order);
  for (const auto& t : nf.terms()) {
    if (t.mono.partial_degree(0, n) != 0) return false;
  }
  return true;
}

struct ThresholdPolicy {
  enum class Kind {
    /// Per-degree constants.
    constants,
    /// base(i) + 3(n - 1) from a bound table.
    eta_derived,
    /// n - 1, then descend until the generators form a regular sequence.
    maximal,
  };
  Kind kind = Kind::maximal;
  /// For constants: degree -> threshold; key 0 applies to unlisted degrees.
  std::map<unsigned, long> constants;
  bounds::BoundTable table = bounds::BoundTable::standard(1, 0);
  /// Optional cap on every threshold.
  std::optional<long> max_k;

  static ThresholdPolicy constant(long k) {
    ThresholdPolicy p;
    p.kind = Kind::constants;
    p.constants[0] = k;
    return p;
  }
  static ThresholdPolicy eta(bounds::BoundTable t) {
    ThresholdPolicy p;
    p.kind = Kind::eta_derived;
    p.table = std::move(t);
    return p;
  }

  /// Descend on elements of V_i having a k-collapse, k = threshold(δ, i).
  long threshold(const DimensionSequence& delta, unsigned i) const;
  std::string name() const;
};

struct DescentStep {
  DimensionSequence before;
  unsigned degree = 0;
  CollapseWitness<PrimeField> witness;
  DimensionSequence after;
  /// How the collapsing element was found: basis, random, projective or
  /// regularity.
  std::string regime;
};

struct DescentTrace {
  std::string policy;
  std::vector<DescentStep> steps;
  std::vector<Form<PrimeField>> final_generators;
  /// False when a budget stopped the descent.
  bool complete = true;
  /// The last round searched every projective class of every V_i.
  bool exhaustive = false;
  std::vector<bool> members;
  bool all_members = false;
  std::optional<bool> regular_sequence;
};

struct DescentOptions {
  Budget budget;
  std::uint64_t seed = 1;
  std::size_t random_samples = 16;
  /// Enumerate all projective classes of V_i when there are at most this many.
  std::uint64_t projective_cap = 4096;
  std::size_t max_steps = 10000;
};

/// Replaces the target of w (an element of V_i) by the witness factors.
GradedSpace<PrimeField> descend_step(const GradedSpace<PrimeField>& v, unsigned i, const CollapseWitness<PrimeField>& w);

/// Descends until no element meets the policy thresholds, then certifies
/// membership of the original basis and regularity of the output.
DescentTrace small_subalgebra(const GradedSpace<PrimeField>& v, const ThresholdPolicy& policy,
                              const DescentOptions& options = {});

}  // namespace fst
