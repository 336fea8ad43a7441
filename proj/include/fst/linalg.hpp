#pragma once

#include <optional>
#include <span>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "fst/field.hpp"
#include "fst/kernels.hpp"
#include "fst/polynomial.hpp"

// Dense linear algebra over a coefficient field. Row operations over F_p go
// through the mod-p kernels; other fields use the generic loop.
namespace fst::linalg {

/// y += a * x
template <CoefficientField F>
void axpy(const F& k, std::span<typename F::value_type> y, std::span<const typename F::value_type> x,
          const typename F::value_type& a) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    kernels::axpy_mod(y, x, a, k.characteristic());
  } else {
    for (std::size_t c = 0; c < y.size(); ++c) y[c] = k.add(y[c], k.mul(a, x[c]));
  }
}

template <CoefficientField F>
void scale(const F& k, std::span<typename F::value_type> y, const typename F::value_type& a) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    kernels::scale_mod(y, a, k.characteristic());
  } else {
    for (auto& v : y) v = k.mul(v, a);
  }
}

template <CoefficientField F>
class Matrix {
 public:
  using Coeff = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Coeff& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Coeff> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Coeff> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }
  /// row(dst) += a * row(src)
  void add_row_multiple(std::size_t dst, std::size_t src, const Coeff& a) {
    axpy(field_, row(dst), std::span<const Coeff>(row(src)), a);
  }
  void scale_row(std::size_t r, const Coeff& a) { scale(field_, row(r), a); }

  /// In-place reduced row echelon form; returns the pivot column of each
  /// nonzero row, in order. Only the first `pivot_cols` columns are eligible as
  /// pivots (defaults to all).
  std::vector<std::size_t> rref(std::size_t pivot_cols = static_cast<std::size_t>(-1)) {
    pivot_cols = std::min(pivot_cols, cols_);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && field_.is_zero(at(piv, c))) ++piv;
      if (piv == rows_) continue;
      swap_rows(r, piv);
      scale_row(r, field_.inv(at(r, c)));
      for (std::size_t o = 0; o < rows_; ++o) {
        if (o != r && !field_.is_zero(at(o, c))) add_row_multiple(o, r, field_.neg(at(o, c)));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<Coeff> data_;
};

template <CoefficientField F>
std::size_t rank(Matrix<F> m) {
  return m.rref().size();
}

/// Solves A x = b; nullopt when inconsistent. Free variables are set to 0.
template <CoefficientField F>
std::optional<std::vector<typename F::value_type>> solve(const Matrix<F>& a,
                                                         std::span<const typename F::value_type> b) {
  const F& k = a.field();
  Matrix<F> aug(k, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  auto pivots = aug.rref(a.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (!k.is_zero(aug.at(r, a.cols()))) return std::nullopt;
  }
  std::vector<typename F::value_type> x(a.cols(), k.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

/// Column index of every monomial occurring in the polynomials, in order of
/// first appearance.
template <CoefficientField F>
class MonomialIndex {
 public:
  explicit MonomialIndex(std::span<const Polynomial<F>> polys) {
    for (const auto& p : polys) add(p);
  }
  void add(const Polynomial<F>& p) {
    for (const auto& t : p.terms()) {
      if (index_.emplace(t.mono, monos_.size()).second) monos_.push_back(t.mono);
    }
  }
  std::size_t size() const { return monos_.size(); }
  std::optional<std::size_t> find(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  const std::vector<Monomial>& monomials() const { return monos_; }

 private:
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<Monomial> monos_;
};

/// Coefficient matrix: one row per polynomial, one column per indexed monomial.
template <CoefficientField F>
Matrix<F> coefficient_rows(const F& field, std::span<const Polynomial<F>> polys, const MonomialIndex<F>& idx) {
  Matrix<F> m(field, polys.size(), idx.size());
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (const auto& t : polys[r].terms()) m.at(r, *idx.find(t.mono)) = t.coeff;
  }
  return m;
}

/// Indices of a maximal linearly independent subset, chosen greedily in input
/// order (a polynomial is kept iff it is independent of those kept before it).
template <CoefficientField F>
std::vector<std::size_t> greedy_independent(std::span<const Polynomial<F>> polys) {
  using Coeff = typename F::value_type;
  std::vector<std::size_t> kept;
  if (polys.empty()) return kept;
  const F& k = polys.front().field();
  MonomialIndex<F> idx(polys);
  std::vector<std::vector<Coeff>> basis;
  std::vector<std::size_t> pivot;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::vector<Coeff> row(idx.size(), k.zero());
    for (const auto& t : polys[i].terms()) row[*idx.find(t.mono)] = t.coeff;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Coeff c = row[pivot[b]];
      if (!k.is_zero(c)) axpy(k, std::span<Coeff>(row), std::span<const Coeff>(basis[b]), k.neg(c));
    }
    std::size_t p = 0;
    while (p < row.size() && k.is_zero(row[p])) ++p;
    if (p == row.size()) continue;
    scale(k, std::span<Coeff>(row), k.inv(row[p]));
    basis.push_back(std::move(row));
    pivot.push_back(p);
    kept.push_back(i);
  }
  return kept;
}

/// Is `target` in the linear span of `polys`?
template <CoefficientField F>
bool in_span(const Polynomial<F>& target, std::span<const Polynomial<F>> polys) {
  if (target.is_zero()) return true;
  const F& k = target.field();
  MonomialIndex<F> idx(polys);
  idx.add(target);
  // Columns = polynomials, rows = monomials.
  Matrix<F> a(k, idx.size(), polys.size());
  for (std::size_t c = 0; c < polys.size(); ++c) {
    for (const auto& t : polys[c].terms()) a.at(*idx.find(t.mono), c) = t.coeff;
  }
  std::vector<typename F::value_type> b(idx.size(), k.zero());
  for (const auto& t : target.terms()) b[*idx.find(t.mono)] = t.coeff;
  return solve(a, std::span<const typename F::value_type>(b)).has_value();
}

}  // namespace fst::linalg
