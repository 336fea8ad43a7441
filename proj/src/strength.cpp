#include "fst/strength.hpp"

#include <numeric>
#include <unordered_map>

#include "fst/linalg.hpp"

namespace fst {

namespace {

using Coeff = PrimeField::value_type;
using Poly = Polynomial<PrimeField>;

class Counter {
 public:
  Counter(const Budget& budget, CollapseSearchStats* stats) : limit_(budget.max_enumeration), stats_(stats) {}
  void tick() {
    if (++count_ > limit_) {
      throw BudgetExceeded("collapse search exceeded " + std::to_string(limit_) + " candidates");
    }
    if (stats_) ++stats_->candidates;
  }

 private:
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
  CollapseSearchStats* stats_;
};

// Visits every a-dimensional subspace of F_p^n once, as the rows of its
// reduced echelon form. Stops and returns true as soon as visit does.
template <class Visit>
bool for_each_subspace(std::uint32_t p, std::size_t n, std::size_t a, Visit&& visit) {
  if (a == 0) return visit(std::vector<std::vector<Coeff>>{}, std::vector<std::size_t>{});
  if (a > n) return false;
  std::vector<std::size_t> piv(a);
  std::iota(piv.begin(), piv.end(), 0);
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < a; ++r) {
      std::size_t next = r + 1;
      for (std::size_t c = piv[r] + 1; c < n; ++c) {
        if (next < a && piv[next] == c) {
          ++next;
          continue;
        }
        free.emplace_back(r, c);
      }
    }
    std::vector<std::vector<Coeff>> rows(a, std::vector<Coeff>(n, 0));
    for (std::size_t r = 0; r < a; ++r) rows[r][piv[r]] = 1;
    std::vector<Coeff> digits(free.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < free.size(); ++s) rows[free[s].first][free[s].second] = digits[s];
      if (visit(rows, piv)) return true;
      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == p) digits[s++] = 0;
      if (s == digits.size()) break;
    }
    // Next pivot combination.
    std::size_t i = a;
    while (i > 0 && piv[i - 1] == n - a + i - 1) --i;
    if (i == 0) return false;
    ++piv[i - 1];
    for (std::size_t j = i; j < a; ++j) piv[j] = piv[j - 1] + 1;
  }
}

Poly linear_form(const PrimeField& k, const std::vector<Coeff>& row) {
  std::size_t n = row.size();
  Poly out(k, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (row[j] != 0) out = out + Poly::variable(k, n, j).scaled(row[j]);
  }
  return out;
}

// F modulo the ideal of an echelon family of linear forms: eliminate each
// pivot variable.
bool in_linear_ideal(const Poly& f, const std::vector<std::vector<Coeff>>& rows, const std::vector<std::size_t>& piv) {
  const auto& k = f.field();
  std::size_t n = f.nvars();
  std::vector<Poly> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(Poly::variable(k, n, j));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Poly img(k, n);
    for (std::size_t c = piv[r] + 1; c < n; ++c) {
      if (rows[r][c] != 0) img = img + Poly::variable(k, n, c).scaled(k.neg(rows[r][c]));
    }
    images[piv[r]] = img;
  }
  return f.substitute(images).is_zero();
}

// Nonzero forms of degree e up to scaling (first nonzero coefficient 1).
std::vector<Poly> projective_forms(const PrimeField& k, std::size_t n, unsigned e, const Budget& budget) {
  auto monos = monomials_of_degree(n, e);
  long double total = 1;
  for (std::size_t i = 0; i < monos.size(); ++i) total *= k.characteristic();
  if (total > static_cast<long double>(budget.max_enumeration)) {
    throw BudgetExceeded("collapse search: too many forms of degree " + std::to_string(e));
  }
  std::vector<Poly> out;
  std::vector<Coeff> digits(monos.size(), 0);
  while (true) {
    std::size_t s = 0;
    while (s < digits.size() && ++digits[s] == k.characteristic()) digits[s++] = 0;
    if (s == digits.size()) break;
    std::size_t lead = 0;
    while (digits[lead] == 0) ++lead;
    if (digits[lead] != 1) continue;
    std::vector<Term<PrimeField>> ts;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (digits[i] != 0) ts.push_back({monos[i], digits[i]});
    }
    out.push_back(Poly::from_terms(k, n, std::move(ts)));
  }
  return out;
}

// Solves Σ G_j H_j = F for forms H_j of complementary degree.
CollapseWitness<PrimeField> reconstruct(const Form<PrimeField>& f, const std::vector<Poly>& gens) {
  const auto& k = f.poly().field();
  std::size_t n = f.nvars();
  unsigned d = f.degree();
  auto targets = monomials_of_degree(n, d);
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (std::size_t i = 0; i < targets.size(); ++i) row_of.emplace(targets[i], i);

  std::vector<std::pair<std::size_t, Monomial>> cols;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (const auto& m : monomials_of_degree(n, d - static_cast<unsigned>(gens[j].degree()))) cols.emplace_back(j, m);
  }
  linalg::Matrix<PrimeField> a(k, targets.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& t : gens[cols[c].first].terms()) a.at(row_of.at(t.mono * cols[c].second), c) = t.coeff;
  }
  std::vector<Coeff> b(targets.size(), 0);
  for (const auto& t : f.poly().terms()) b[row_of.at(t.mono)] = t.coeff;
  auto x = linalg::solve(a, std::span<const Coeff>(b));
  if (!x) throw std::logic_error("collapse witness: membership without a solution");

  std::vector<Poly> h(gens.size(), Poly(k, n));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if ((*x)[c] != 0) h[cols[c].first] = h[cols[c].first] + Poly::monomial(k, cols[c].second, (*x)[c]);
  }
  std::vector<CollapseWitness<PrimeField>::Pair> pairs;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (!h[j].is_zero()) pairs.emplace_back(Form<PrimeField>(gens[j]), Form<PrimeField>(h[j]));
  }
  return CollapseWitness<PrimeField>(f, std::move(pairs));
}

}  // namespace

std::optional<CollapseWitness<PrimeField>> find_collapse(const Form<PrimeField>& f, std::size_t k,
                                                         const Budget& budget, CollapseSearchStats* stats) {
  const auto& field = f.poly().field();
  std::size_t n = f.nvars();
  unsigned d = f.degree();
  if (k == 0 || d < 2) return std::nullopt;
  Counter counter(budget, stats);

  std::vector<Poly> highs;
  for (unsigned e = 2; e <= d / 2; ++e) {
    auto fs = projective_forms(field, n, e, budget);
    highs.insert(highs.end(), fs.begin(), fs.end());
  }

  std::optional<CollapseWitness<PrimeField>> found;
  for (std::size_t a = std::min(k, n) + 1; a-- > 0;) {
    std::size_t b = k - a;
    if (b > 0 && highs.empty()) continue;
    std::vector<std::size_t> pick(b, 0);
    for_each_subspace(field.characteristic(), n, a, [&](const auto& rows, const auto& piv) {
      std::vector<Poly> lin;
      for (const auto& r : rows) lin.push_back(linear_form(field, r));
      if (b == 0) {
        counter.tick();
        if (!in_linear_ideal(f.poly(), rows, piv)) return false;
        found = reconstruct(f, lin);
        return true;
      }
      // Multisets of b higher-degree generators, as nondecreasing indices.
      std::fill(pick.begin(), pick.end(), 0);
      while (true) {
        counter.tick();
        auto gens = lin;
        for (std::size_t i : pick) gens.push_back(highs[i]);
        auto basis = groebner_basis(gens, MonomialOrder{}, budget);
        if (normal_form(f.poly(), basis).is_zero()) {
          found = reconstruct(f, gens);
          return true;
        }
        std::size_t i = b;
        while (i > 0 && pick[i - 1] == highs.size() - 1) --i;
        if (i == 0) return false;
        ++pick[i - 1];
        for (std::size_t j = i; j < b; ++j) pick[j] = pick[i - 1];
      }
    });
    if (found) return found;
  }
  return std::nullopt;
}

StrengthReport strength_exact(const Form<PrimeField>& f, const Budget& budget, std::optional<std::size_t> max_k) {
  StrengthReport r;
  if (f.degree() == 1) {
    r.lower = r.upper = r.jacobian_bound = ExtendedInt::infinite();
    r.jacobian_height = ExtendedHeight::infinite();
    r.exact = ExtendedInt::infinite();
    return r;
  }
  std::size_t n = f.nvars();
  r.field_caveat = true;
  r.jacobian_height = jacobian_height(f, budget);
  r.jacobian_bound = strength_lower_bound(f, budget);
  r.lower = r.jacobian_bound;
  // F lies in (x_1, ..., x_N): an N-collapse always exists.
  r.upper = ExtendedInt(static_cast<long>(n) - 1);
  std::size_t limit = max_k ? std::min(n, *max_k + 1) : n;
  CollapseSearchStats stats;
  for (std::size_t k = 1; k <= limit; ++k) {
    std::optional<CollapseWitness<PrimeField>> w;
    try {
      w = find_collapse(f, k, budget, &stats);
    } catch (const BudgetExceeded&) {
      r.complete = false;
      r.budget_exceeded = true;
      r.lower = std::max(r.lower, ExtendedInt(static_cast<long>(k) - 1));
      r.candidates = stats.candidates;
      return r;
    }
    if (w) {
      ExtendedInt s(static_cast<long>(k) - 1);
      if (s < r.jacobian_bound) throw std::logic_error("strength below its Jacobian lower bound");
      r.lower = r.upper = s;
      r.exact = s;
      r.witness = std::move(w);
      r.candidates = stats.candidates;
      return r;
    }
  }
  if (limit == n) throw std::logic_error("no N-collapse found for a form in N variables");
  r.complete = false;
  r.lower = std::max(r.lower, ExtendedInt(static_cast<long>(limit)));
  r.candidates = stats.candidates;
  return r;
}

}  // namespace fst
