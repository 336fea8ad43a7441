#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fst/groebner.hpp"
#include "fst/module.hpp"
#include "fst/polynomial.hpp"

namespace fst {

template <CoefficientField F>
Ideal<F> ideal_of(const std::vector<Form<F>>& forms) {
  if (forms.empty()) throw PreconditionError("empty list of forms");
  std::vector<Polynomial<F>> gens;
  for (const auto& f : forms) {
    if (f.nvars() != forms.front().nvars()) throw PreconditionError("forms live in different rings");
    gens.push_back(f.poly());
  }
  return Ideal<F>(forms.front().poly().field(), forms.front().nvars(), std::move(gens));
}

/// Homogeneous forms are a regular sequence iff their ideal has height equal
/// to their number.
template <CoefficientField F>
bool is_regular_sequence(const std::vector<Form<F>>& forms, const Budget& budget = {}) {
  if (forms.empty()) return true;
  return height(ideal_of(forms), budget) == ExtendedHeight(static_cast<long>(forms.size()));
}

/// First Koszul homology check: every syzygy of (f_1, ..., f_c) is a
/// combination of the trivial ones f_j e_i - f_i e_j.
template <CoefficientField F>
bool koszul_h1_vanishes(const std::vector<Form<F>>& forms, const Budget& budget = {}) {
  if (forms.empty()) return true;
  const auto& k = forms.front().poly().field();
  std::size_t n = forms.front().nvars(), c = forms.size();
  std::vector<Polynomial<F>> row;
  for (const auto& f : forms) row.push_back(f.poly());
  auto d1 = PolyMatrix<F>::from_rows(k, n, {row});
  auto ker = kernel_of_map(d1, SubmoduleOfFree<F>(k, n, 1), budget);
  std::vector<std::vector<Polynomial<F>>> trivial;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      std::vector<Polynomial<F>> v(c, Polynomial<F>(k, n));
      v[i] = forms[j].poly();
      v[j] = Polynomial<F>(k, n) - forms[i].poly();
      trivial.push_back(std::move(v));
    }
  }
  auto basis = module_groebner_basis(SubmoduleOfFree<F>(k, n, c, std::move(trivial)), budget);
  for (const auto& g : ker.generators()) {
    if (!module_contains(basis, g)) return false;
  }
  return true;
}

/// Determinant by Laplace expansion along the first row.
template <CoefficientField F>
Polynomial<F> determinant(const std::vector<std::vector<Polynomial<F>>>& m) {
  std::size_t t = m.size();
  if (t == 1) return m[0][0];
  const auto& z = m[0][0];
  Polynomial<F> det(z.field(), z.nvars());
  for (std::size_t c = 0; c < t; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial<F>>> minor;
    for (std::size_t r = 1; r < t; ++r) {
      std::vector<Polynomial<F>> row;
      for (std::size_t j = 0; j < t; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(std::move(row));
    }
    auto term = m[0][c] * determinant(minor);
    det = c % 2 == 0 ? det + term : det - term;
  }
  return det;
}

namespace certify_detail {

inline void combinations(std::size_t n, std::size_t t, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == n - t + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace certify_detail

/// Ideal of all t × t minors.
template <CoefficientField F>
Ideal<F> minors_ideal(const PolyMatrix<F>& mat, std::size_t t) {
  if (t == 0 || t > std::min(mat.rows(), mat.cols())) throw PreconditionError("minors_ideal: bad minor size");
  std::vector<Polynomial<F>> minors;
  certify_detail::combinations(mat.rows(), t, [&](const std::vector<std::size_t>& rs) {
    certify_detail::combinations(mat.cols(), t, [&](const std::vector<std::size_t>& cs) {
      std::vector<std::vector<Polynomial<F>>> sub;
      for (std::size_t r : rs) {
        std::vector<Polynomial<F>> row;
        for (std::size_t c : cs) row.push_back(mat.at(r, c));
        sub.push_back(std::move(row));
      }
      auto d = determinant(sub);
      if (!d.is_zero()) minors.push_back(std::move(d));
    });
  });
  return Ideal<F>(mat.field(), mat.nvars(), std::move(minors));
}

struct HeightRecord {
  std::string ideal;
  ExtendedHeight height{0};
};

struct SingularLocus {
  /// Codimension of the singular locus inside the quotient, capped at N - c.
  long codim = 0;
  /// The Jacobian ideal is the unit ideal.
  bool smooth = false;
  std::vector<HeightRecord> heights;
};

/// J = (F_1..F_c) + I_c(jacobian); codim = height(J) - c, or N - c when J = R.
template <CoefficientField F>
SingularLocus singular_locus_codim(const std::vector<Form<F>>& forms, const Budget& budget = {}) {
  auto I = ideal_of(forms);
  long c = static_cast<long>(forms.size());
  long n = static_cast<long>(I.nvars());
  SingularLocus out;
  auto hI = height(I, budget);
  out.heights.push_back({"forms", hI});
  if (hI != ExtendedHeight(c)) throw PreconditionError("singular_locus_codim: forms are not a regular sequence");
  auto jac = jacobian(forms);
  auto J = I + minors_ideal(PolyMatrix<F>::from_rows(I.field(), I.nvars(), jac), static_cast<std::size_t>(c));
  auto hJ = height(J, budget);
  out.heights.push_back({"forms + jacobian minors", hJ});
  if (hJ.is_infinite()) {
    out.smooth = true;
    out.codim = n - c;
  } else {
    out.codim = hJ.value() - c;
  }
  return out;
}

template <CoefficientField F>
struct RetaCertificate {
  std::vector<Form<F>> forms;
  long eta = 0;
  SingularLocus locus;
  bool pass = false;
};

/// R_eta holds when the singular locus has codimension at least eta + 1.
template <CoefficientField F>
RetaCertificate<F> check_reta(const std::vector<Form<F>>& forms, long eta, const Budget& budget = {}) {
  if (eta < 0) throw PreconditionError("check_reta: eta must be nonnegative");
  RetaCertificate<F> cert{forms, eta, singular_locus_codim(forms, budget), false};
  cert.pass = cert.locus.codim >= eta + 1;
  return cert;
}

struct MinorsHeightReport {
  std::vector<int> row_degrees;
  ExtendedHeight b{0};
  ExtendedHeight minors_height{0};
  /// b - h + 1 (infinite when b is).
  ExtendedHeight required{0};
  bool holds = false;
};

/// For an h × m matrix whose rows are homogeneous of mutually distinct
/// degrees: height(I_h) >= b - h + 1, b = min height of a row ideal.
template <CoefficientField F>
MinorsHeightReport minors_height_check(const PolyMatrix<F>& mat, const Budget& budget = {}) {
  std::size_t h = mat.rows();
  if (h == 0 || h > mat.cols()) throw PreconditionError("minors_height_check: need 1 <= rows <= cols");
  MinorsHeightReport rep;
  for (std::size_t r = 0; r < h; ++r) {
    int deg = -1;
    for (const auto& e : mat.row(r)) {
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || (deg >= 0 && e.degree() != deg)) {
        throw PreconditionError("minors_height_check: row " + std::to_string(r + 1) + " is not homogeneous");
      }
      deg = e.degree();
    }
    if (deg < 0) throw PreconditionError("minors_height_check: zero row");
    for (int prev : rep.row_degrees) {
      if (prev == deg) throw PreconditionError("minors_height_check: rows must have distinct degrees");
    }
    rep.row_degrees.push_back(deg);
  }
  rep.b = ExtendedHeight::infinite();
  for (std::size_t r = 0; r < h; ++r) {
    rep.b = std::min(rep.b, height(Ideal<F>(mat.field(), mat.nvars(), mat.row(r)), budget));
  }
  rep.required = rep.b.is_infinite() ? ExtendedHeight::infinite()
                                     : ExtendedHeight(std::max(0L, rep.b.value() - static_cast<long>(h) + 1));
  rep.minors_height = height(minors_ideal(mat, h), budget);
  rep.holds = rep.minors_height >= rep.required;
  return rep;
}

}  // namespace fst
