#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "fst/linalg.hpp"
#include "fst/polynomial.hpp"

namespace fst {

/// (δ1, ..., δd): δi = dimension of the degree-i piece. Trailing zeros are
/// always stripped, so (2, 0) and (2) are the same sequence.
class DimensionSequence {
 public:
  DimensionSequence() = default;
  explicit DimensionSequence(std::vector<long> entries);

  const std::vector<long>& entries() const { return entries_; }
  /// δ_i for degree i >= 1 (zero beyond the stored length).
  long at_degree(std::size_t i) const { return i >= 1 && i <= entries_.size() ? entries_[i - 1] : 0; }
  std::size_t max_degree() const { return entries_.size(); }
  long total() const;
  bool empty() const { return entries_.empty(); }

  /// Larger iff larger at the highest degree where the two differ.
  std::strong_ordering operator<=>(const DimensionSequence& o) const;
  bool operator==(const DimensionSequence& o) const { return entries_ == o.entries_; }

  std::string to_string() const;

 private:
  std::vector<long> entries_;
};

/// Finite-dimensional graded space V = V1 ⊕ ... ⊕ Vd of forms, held as a
/// homogeneous basis grouped by degree.
template <CoefficientField F>
class GradedSpace {
 public:
  using Poly = Polynomial<F>;

  /// Splits the inputs into homogeneous components and keeps a linearly
  /// independent subset (greedy, in input order) of each degree.
  GradedSpace(F field, std::size_t nvars, const std::vector<Poly>& spanning) : field_(field), nvars_(nvars) {
    std::map<unsigned, std::vector<Poly>> by_degree;
    for (const auto& p : spanning) {
      if (p.nvars() != nvars_) throw PreconditionError("GradedSpace: polynomial in a different ring");
      if (p.is_zero()) continue;
      for (int d = p.min_degree(); d <= p.degree(); ++d) {
        auto c = p.homogeneous_component(static_cast<unsigned>(d));
        if (c.is_zero()) continue;
        if (d == 0) throw PreconditionError("GradedSpace: forms must have positive degree");
        by_degree[static_cast<unsigned>(d)].push_back(std::move(c));
      }
    }
    for (auto& [d, polys] : by_degree) {
      for (std::size_t i : linalg::greedy_independent<F>(polys)) basis_.push_back(Form<F>(polys[i]));
    }
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  /// Basis ordered by degree, input order within a degree.
  const std::vector<Form<F>>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }

  std::vector<Form<F>> basis_of_degree(unsigned d) const {
    std::vector<Form<F>> out;
    for (const auto& f : basis_) {
      if (f.degree() == d) out.push_back(f);
    }
    return out;
  }
  std::vector<Poly> polys() const {
    std::vector<Poly> out;
    for (const auto& f : basis_) out.push_back(f.poly());
    return out;
  }

  DimensionSequence dimension_sequence() const {
    std::vector<long> e;
    for (const auto& f : basis_) {
      if (e.size() < f.degree()) e.resize(f.degree(), 0);
      ++e[f.degree() - 1];
    }
    return DimensionSequence(std::move(e));
  }

  /// Is the homogeneous polynomial p in V_{deg p}?
  bool contains(const Poly& p) const {
    if (p.is_zero()) return true;
    if (!p.is_homogeneous()) return false;
    std::vector<Poly> piece;
    for (const auto& f : basis_of_degree(static_cast<unsigned>(p.degree()))) piece.push_back(f.poly());
    return linalg::in_span<F>(p, piece);
  }

 private:
  F field_;
  std::size_t nvars_;
  std::vector<Form<F>> basis_;
};

/// A linearly independent spanning set of the partial derivatives of F.
template <CoefficientField F>
std::vector<Polynomial<F>> derivative_space(const Polynomial<F>& f) {
  if (f.is_zero()) throw PreconditionError("derivative_space: zero polynomial");
  auto grad = gradient(f);
  std::vector<Polynomial<F>> nonzero;
  for (auto& g : grad) {
    if (!g.is_zero()) nonzero.push_back(std::move(g));
  }
  std::vector<Polynomial<F>> out;
  for (std::size_t i : linalg::greedy_independent<F>(nonzero)) out.push_back(nonzero[i]);
  return out;
}

}  // namespace fst
