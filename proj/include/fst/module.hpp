#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "fst/groebner.hpp"

namespace fst {

/// Dense matrix of polynomials, row-major.
template <CoefficientField F>
class PolyMatrix {
 public:
  using Poly = Polynomial<F>;

  PolyMatrix(F field, std::size_t nvars, std::size_t rows, std::size_t cols)
      : field_(field), nvars_(nvars), rows_(rows), cols_(cols), data_(rows * cols, Poly(field, nvars)) {}

  /// Builds from columns, each of length `rows`.
  static PolyMatrix from_columns(F field, std::size_t nvars, std::size_t rows, const std::vector<std::vector<Poly>>& cols) {
    PolyMatrix m(field, nvars, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw PreconditionError("column length does not match the row count");
      for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
  }
  static PolyMatrix from_rows(F field, std::size_t nvars, const std::vector<std::vector<Poly>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    PolyMatrix m(field, nvars, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw PreconditionError("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Poly> column(std::size_t c) const {
    std::vector<Poly> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
  }
  std::vector<Poly> row(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }

  PolyMatrix operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw PreconditionError("matrix dimensions do not compose");
    PolyMatrix m(field_, nvars_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < o.cols_; ++c) {
        Poly s(field_, nvars_);
        for (std::size_t k = 0; k < cols_; ++k) {
          if (!at(r, k).is_zero() && !o.at(k, c).is_zero()) s += at(r, k) * o.at(k, c);
        }
        m.at(r, c) = std::move(s);
      }
    }
    return m;
  }
  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
  }

 private:
  F field_;
  std::size_t nvars_, rows_, cols_;
  std::vector<Poly> data_;
};

/// Submodule of the free module R^rank, given by generating vectors.
template <CoefficientField F>
class SubmoduleOfFree {
 public:
  using Poly = Polynomial<F>;
  using Vector = std::vector<Poly>;

  SubmoduleOfFree(F field, std::size_t nvars, std::size_t rank, std::vector<Vector> gens = {})
      : field_(std::move(field)), nvars_(nvars), rank_(rank) {
    for (auto& g : gens) {
      if (g.size() != rank_) throw PreconditionError("generator length does not match the module rank");
      if (std::any_of(g.begin(), g.end(), [](const Poly& p) { return !p.is_zero(); })) gens_.push_back(std::move(g));
    }
  }
  /// The ideal (gens) as a submodule of R^1.
  static SubmoduleOfFree from_ideal(const Ideal<F>& I) {
    std::vector<Vector> g;
    for (const auto& p : I.generators()) g.push_back({p});
    return SubmoduleOfFree(I.field(), I.nvars(), 1, std::move(g));
  }
  static SubmoduleOfFree from_columns(const PolyMatrix<F>& m) {
    std::vector<Vector> g;
    for (std::size_t c = 0; c < m.cols(); ++c) g.push_back(m.column(c));
    return SubmoduleOfFree(m.field(), m.nvars(), m.rows(), std::move(g));
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Vector>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Generators as the columns of a rank × #gens matrix.
  PolyMatrix<F> matrix() const { return PolyMatrix<F>::from_columns(field_, nvars_, rank_, gens_); }

 private:
  F field_;
  std::size_t nvars_, rank_;
  std::vector<Vector> gens_;
};

namespace module_detail {

template <CoefficientField F>
gb_detail::Vec<F> to_vec(const std::vector<Polynomial<F>>& v, std::size_t offset = 0) {
  gb_detail::Vec<F> out;
  for (std::size_t c = 0; c < v.size(); ++c) {
    auto part = gb_detail::to_vec(v[c], static_cast<std::uint32_t>(c + offset));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Components [lo, lo + len) of a module vector.
template <CoefficientField F>
std::vector<Polynomial<F>> from_vec(const F& k, std::size_t nvars, const gb_detail::Vec<F>& v, std::size_t lo,
                                    std::size_t len) {
  std::vector<std::vector<Term<F>>> parts(len);
  for (const auto& t : v) {
    auto c = t.mono.component();
    if (c < lo || c >= lo + len) continue;
    Term<F> u = t;
    u.mono.set_component(0);
    parts[c - lo].push_back(std::move(u));
  }
  std::vector<Polynomial<F>> out;
  for (auto& p : parts) out.push_back(Polynomial<F>::from_terms(k, nvars, std::move(p)));
  return out;
}

}  // namespace module_detail

/// Reduced Gröbner basis of a submodule under position-over-term grevlex.
template <CoefficientField F>
std::vector<std::vector<Polynomial<F>>> module_groebner_basis(const SubmoduleOfFree<F>& M, const Budget& budget = {}) {
  gb_detail::Engine<F> eng(M.field(), MonomialOrder{}, true, budget);
  std::vector<gb_detail::Vec<F>> in;
  for (const auto& g : M.generators()) in.push_back(module_detail::to_vec(g));
  std::vector<std::vector<Polynomial<F>>> out;
  for (const auto& v : eng.buchberger(std::move(in))) {
    out.push_back(module_detail::from_vec(M.field(), M.nvars(), v, 0, M.rank()));
  }
  return out;
}

/// Is v in the submodule generated by `basis`, a module Gröbner basis?
template <CoefficientField F>
bool module_contains(const std::vector<std::vector<Polynomial<F>>>& basis, const std::vector<Polynomial<F>>& v) {
  if (basis.empty() || v.empty()) {
    return std::all_of(v.begin(), v.end(), [](const Polynomial<F>& p) { return p.is_zero(); });
  }
  const F& k = v.front().field();
  gb_detail::Engine<F> eng(k, MonomialOrder{}, true, Budget{});
  std::vector<gb_detail::Vec<F>> bv;
  for (const auto& b : basis) {
    auto x = module_detail::to_vec(b);
    eng.sort(x);
    bv.push_back(std::move(x));
  }
  auto x = module_detail::to_vec(v);
  eng.sort(x);
  std::vector<char> active(bv.size(), 1);
  return eng.reduce(std::move(x), bv, active).empty();
}

/// Generators of Ker(R^r --Q--> R^m -> R^m / M), Q an m × r matrix.
/// Computed from a module Gröbner basis of the columns [Q_j | e_j] and
/// [M_i | 0] in R^{m+r} whose first m components dominate: the basis elements
/// vanishing there carry the kernel in their last r components.
template <CoefficientField F>
SubmoduleOfFree<F> kernel_of_map(const PolyMatrix<F>& Q, const SubmoduleOfFree<F>& M, const Budget& budget = {}) {
  const std::size_t m = Q.rows(), r = Q.cols();
  if (M.rank() != m) throw PreconditionError("kernel_of_map: target rank mismatch");
  const F& k = Q.field();
  std::size_t n = Q.nvars();
  gb_detail::Engine<F> eng(k, MonomialOrder{}, true, budget);
  std::vector<gb_detail::Vec<F>> in;
  for (std::size_t j = 0; j < r; ++j) {
    auto col = Q.column(j);
    std::vector<Polynomial<F>> aug = col;
    for (std::size_t e = 0; e < r; ++e) {
      aug.push_back(e == j ? Polynomial<F>::constant(k, n, k.one()) : Polynomial<F>(k, n));
    }
    in.push_back(module_detail::to_vec(aug));
  }
  for (const auto& g : M.generators()) in.push_back(module_detail::to_vec(g));
  std::vector<std::vector<Polynomial<F>>> ker;
  for (const auto& v : eng.buchberger(std::move(in))) {
    if (v.front().mono.component() < m) continue;
    ker.push_back(module_detail::from_vec(k, n, v, m, r));
  }
  return SubmoduleOfFree<F>(k, n, r, std::move(ker));
}

namespace module_detail {

/// Degree of a homogeneous vector under component shifts, if it is one.
template <CoefficientField F>
std::optional<long> graded_degree(const std::vector<Polynomial<F>>& v, const std::vector<long>& shifts) {
  std::optional<long> d;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    if (!v[c].is_homogeneous()) return std::nullopt;
    long e = v[c].degree() + shifts[c];
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d;
}

}  // namespace module_detail

/// Drops generators lying in the submodule generated by the others. For a
/// graded module (every generator homogeneous under `shifts`) generators are
/// processed by increasing degree, which yields a minimal generating set.
/// Returns the kept generators and whether the graded minimality applies.
template <CoefficientField F>
std::pair<SubmoduleOfFree<F>, bool> prune_generators(const SubmoduleOfFree<F>& M, const std::vector<long>& shifts,
                                                     const Budget& budget = {}) {
  auto gens = M.generators();
  std::vector<long> degs;
  bool graded = true;
  for (const auto& g : gens) {
    auto d = module_detail::graded_degree(g, shifts);
    if (!d) {
      graded = false;
      degs.push_back(0);
    } else {
      degs.push_back(*d);
    }
  }
  std::vector<std::size_t> idx(gens.size());
  std::iota(idx.begin(), idx.end(), 0);
  if (graded) std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return degs[a] < degs[b]; });

  std::vector<std::vector<Polynomial<F>>> kept;
  if (graded) {
    for (std::size_t i : idx) {
      auto basis = module_groebner_basis(SubmoduleOfFree<F>(M.field(), M.nvars(), M.rank(), kept), budget);
      if (!module_contains(basis, gens[i])) kept.push_back(gens[i]);
    }
  } else {
    // Without a grading, drop a generator if the remaining ones generate it.
    std::vector<char> alive(gens.size(), 1);
    for (std::size_t i = gens.size(); i-- > 0;) {
      std::vector<std::vector<Polynomial<F>>> others;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j != i && alive[j]) others.push_back(gens[j]);
      }
      auto basis = module_groebner_basis(SubmoduleOfFree<F>(M.field(), M.nvars(), M.rank(), others), budget);
      if (module_contains(basis, gens[i])) alive[i] = 0;
    }
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (alive[j]) kept.push_back(gens[j]);
    }
  }
  return {SubmoduleOfFree<F>(M.field(), M.nvars(), M.rank(), std::move(kept)), graded};
}

/// Free resolution 0 <- R^m/M <- F_0 <- F_1 <- ... with F_0 = R^m. matrices[i]
/// is the map F_{i+1} -> F_i, so length() == matrices.size().
template <CoefficientField F>
struct FreeResolution {
  std::vector<PolyMatrix<F>> matrices;
  std::vector<std::size_t> ranks;  // ranks[i] = rank F_i
  bool minimal = true;             // false when some module was not graded

  std::size_t length() const { return matrices.size(); }

  /// Consecutive maps compose to zero.
  bool is_complex() const {
    for (std::size_t i = 0; i + 1 < matrices.size(); ++i) {
      if (!(matrices[i] * matrices[i + 1]).is_zero()) return false;
    }
    return true;
  }
};

template <CoefficientField F>
FreeResolution<F> free_resolution(const SubmoduleOfFree<F>& M, const Budget& budget = {}) {
  FreeResolution<F> res;
  res.ranks.push_back(M.rank());
  std::vector<long> shifts(M.rank(), 0);
  auto [current, graded] = prune_generators(M, shifts, budget);
  res.minimal = graded;
  std::size_t limit = M.nvars() + 1;
  while (!current.is_zero()) {
    if (res.matrices.size() > limit) throw std::logic_error("free resolution longer than the syzygy theorem allows");
    auto mat = current.matrix();
    // Degrees of this step's generators become the next shifts.
    std::vector<long> next_shifts;
    for (const auto& g : current.generators()) {
      auto d = module_detail::graded_degree(g, shifts);
      next_shifts.push_back(d.value_or(0));
    }
    res.matrices.push_back(mat);
    res.ranks.push_back(mat.cols());
    auto syz = kernel_of_map(mat, SubmoduleOfFree<F>(M.field(), M.nvars(), mat.rows()), budget);
    shifts = std::move(next_shifts);
    auto [pruned, g2] = prune_generators(syz, shifts, budget);
    res.minimal = res.minimal && g2;
    current = std::move(pruned);
  }
  return res;
}

/// Length of the (minimal, for graded input) free resolution of R^m / M.
template <CoefficientField F>
std::size_t projective_dimension(const SubmoduleOfFree<F>& M, const Budget& budget = {}) {
  return free_resolution(M, budget).length();
}

}  // namespace fst
