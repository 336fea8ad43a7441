#include "fst/descent.hpp"

#include <algorithm>
#include <random>

#include "fst/certify.hpp"

namespace fst {

namespace {

using Poly = Polynomial<PrimeField>;
using Coeff = PrimeField::value_type;

Poly combination(const std::vector<Form<PrimeField>>& basis, const std::vector<Coeff>& c) {
  const auto& k = basis.front().poly().field();
  Poly out(k, basis.front().nvars());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (c[j] != 0) out = out + basis[j].poly().scaled(c[j]);
  }
  return out;
}

struct Found {
  CollapseWitness<PrimeField> witness;
  std::string regime;
};

// Searches V_i for an element with a k-collapse: basis vectors, then random
// combinations, then every projective class when there are few enough.
std::optional<Found> search_degree(const std::vector<Form<PrimeField>>& basis, std::size_t k,
                                   const DescentOptions& opt, std::mt19937_64& rng, bool& exhaustive) {
  exhaustive = false;
  for (const auto& f : basis) {
    if (auto w = find_collapse(f, k, opt.budget)) return Found{*w, "basis"};
  }
  if (basis.size() == 1) {
    exhaustive = true;
    return std::nullopt;
  }
  const auto& field = basis.front().poly().field();
  std::uint32_t p = field.characteristic();
  std::uniform_int_distribution<Coeff> coeff(0, p - 1);
  for (std::size_t s = 0; s < opt.random_samples; ++s) {
    std::vector<Coeff> c(basis.size());
    for (auto& x : c) x = coeff(rng);
    auto g = combination(basis, c);
    if (g.is_zero()) continue;
    if (auto w = find_collapse(Form<PrimeField>(g), k, opt.budget)) return Found{*w, "random"};
  }
  long double classes = 1;
  for (std::size_t j = 0; j < basis.size(); ++j) classes *= p;
  if (classes > static_cast<long double>(opt.projective_cap)) return std::nullopt;
  std::vector<Coeff> c(basis.size(), 0);
  while (true) {
    std::size_t s = 0;
    while (s < c.size() && ++c[s] == p) c[s++] = 0;
    if (s == c.size()) break;
    std::size_t lead = 0;
    while (c[lead] == 0) ++lead;
    if (c[lead] != 1) continue;
    auto g = combination(basis, c);
    if (auto w = find_collapse(Form<PrimeField>(g), k, opt.budget)) return Found{*w, "projective"};
  }
  exhaustive = true;
  return std::nullopt;
}

// Smallest collapse among the basis forms of the highest degree >= 2.
std::optional<std::pair<unsigned, Found>> smallest_top_collapse(const GradedSpace<PrimeField>& v,
                                                                const DescentOptions& opt) {
  auto delta = v.dimension_sequence();
  unsigned top = static_cast<unsigned>(delta.max_degree());
  if (top < 2) return std::nullopt;
  std::optional<Found> best;
  std::size_t best_k = 0;
  for (const auto& f : v.basis_of_degree(top)) {
    for (std::size_t k = 1; k <= f.nvars() && (!best || k < best_k); ++k) {
      if (auto w = find_collapse(f, k, opt.budget)) {
        best = Found{*w, "regularity"};
        best_k = k;
        break;
      }
    }
  }
  if (!best) throw std::logic_error("form of degree >= 2 without an N-collapse");
  return std::make_pair(top, *best);
}

}  // namespace

long ThresholdPolicy::threshold(const DimensionSequence& delta, unsigned i) const {
  long k = 0;
  switch (kind) {
    case Kind::constants: {
      auto it = constants.find(i);
      if (it == constants.end()) it = constants.find(0);
      if (it == constants.end()) throw PreconditionError("no threshold for degree " + std::to_string(i));
      k = it->second;
      break;
    }
    case Kind::eta_derived:
      k = bounds::eta_A_i(delta, i, table);
      break;
    case Kind::maximal:
      k = delta.total() - 1;
      break;
  }
  if (k < 0) throw PreconditionError("thresholds must be nonnegative");
  return max_k ? std::min(k, *max_k) : k;
}

std::string ThresholdPolicy::name() const {
  switch (kind) {
    case Kind::constants:
      return "constants";
    case Kind::eta_derived:
      return "eta-derived";
    case Kind::maximal:
      return "maximal";
  }
  return "?";
}

GradedSpace<PrimeField> descend_step(const GradedSpace<PrimeField>& v, unsigned i, const CollapseWitness<PrimeField>& w) {
  const auto& target = w.target();
  if (target.degree() != i || !v.contains(target.poly())) {
    throw PreconditionError("descend_step: witness target is not in V_" + std::to_string(i));
  }
  // Complete the target to a basis of V_i, then drop it.
  std::vector<Poly> piece{target.poly()};
  for (const auto& f : v.basis_of_degree(i)) piece.push_back(f.poly());
  auto keep = linalg::greedy_independent<PrimeField>(piece);

  std::vector<Poly> spanning;
  for (const auto& f : v.basis()) {
    if (f.degree() != i) spanning.push_back(f.poly());
  }
  for (std::size_t j : keep) {
    if (j != 0) spanning.push_back(piece[j]);
  }
  std::vector<Poly> added;
  for (const auto& [g, h] : w.pairs()) {
    added.push_back(g.poly());
    added.push_back(h.poly());
  }
  auto lex = MonomialOrder::lex();
  std::stable_sort(added.begin(), added.end(), [&](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex.greater(leading_monomial(a, lex), leading_monomial(b, lex));
  });
  spanning.insert(spanning.end(), added.begin(), added.end());
  GradedSpace<PrimeField> out(v.field(), v.nvars(), spanning);
  if (!(out.dimension_sequence() < v.dimension_sequence())) {
    throw std::logic_error("descent step did not decrease the dimension sequence");
  }
  return out;
}

DescentTrace small_subalgebra(const GradedSpace<PrimeField>& v, const ThresholdPolicy& policy,
                              const DescentOptions& opt) {
  if (v.dimension() == 0) throw PreconditionError("small_subalgebra: empty space");
  DescentTrace trace;
  trace.policy = policy.name();
  std::mt19937_64 rng(opt.seed);
  GradedSpace<PrimeField> cur = v;

  auto apply = [&](unsigned i, Found found) {
    auto before = cur.dimension_sequence();
    cur = descend_step(cur, i, found.witness);
    trace.steps.push_back({before, i, std::move(found.witness), cur.dimension_sequence(), std::move(found.regime)});
  };

  try {
    while (true) {
      if (trace.steps.size() >= opt.max_steps) throw BudgetExceeded("descent exceeded the step budget");
      auto delta = cur.dimension_sequence();
      bool exhaustive = true;
      bool stepped = false;
      for (unsigned i = static_cast<unsigned>(delta.max_degree()); i >= 2 && !stepped; --i) {
        auto basis = cur.basis_of_degree(i);
        if (basis.empty()) continue;
        long k = policy.threshold(delta, i);
        if (k <= 0) continue;
        bool ex = false;
        if (auto found = search_degree(basis, static_cast<std::size_t>(k), opt, rng, ex)) {
          apply(i, std::move(*found));
          stepped = true;
        }
        exhaustive = exhaustive && ex;
      }
      if (stepped) continue;
      trace.exhaustive = exhaustive;
      if (policy.kind == ThresholdPolicy::Kind::maximal && !is_regular_sequence(cur.basis(), opt.budget)) {
        auto top = smallest_top_collapse(cur, opt);
        apply(top->first, std::move(top->second));
        continue;
      }
      break;
    }
  } catch (const BudgetExceeded&) {
    trace.complete = false;
  }

  trace.final_generators = cur.basis();
  auto gens = cur.polys();
  trace.all_members = true;
  try {
    for (const auto& f : v.basis()) {
      bool m = subalgebra_membership(f.poly(), gens, opt.budget);
      trace.members.push_back(m);
      trace.all_members = trace.all_members && m;
    }
    trace.regular_sequence = is_regular_sequence(trace.final_generators, opt.budget);
  } catch (const BudgetExceeded&) {
    trace.complete = false;
    trace.all_members = false;
  }
  return trace;
}

}  // namespace fst
