#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fst/budget.hpp"
#include "fst/order.hpp"
#include "fst/polynomial.hpp"

namespace fst {

struct GbStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_pruned = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;
};

/// Optional trace sink shared by every Gröbner computation on this thread.
/// Null (the default) disables tracing.
inline std::ostream*& gb_trace_stream() {
  thread_local std::ostream* sink = nullptr;
  return sink;
}

namespace gb_detail {

/// Terms sorted in descending order for a fixed MonomialOrder. Monomials may
/// carry module components.
template <CoefficientField F>
using Vec = std::vector<Term<F>>;

template <CoefficientField F>
class Engine {
 public:
  using Coeff = typename F::value_type;

  Engine(F field, MonomialOrder order, bool module_mode, Budget budget)
      : k_(std::move(field)), order_(order), module_(module_mode), budget_(budget) {}

  const GbStats& stats() const { return stats_; }

  void sort(Vec<F>& v) const {
    std::sort(v.begin(), v.end(), [&](const Term<F>& a, const Term<F>& b) { return order_.greater(a.mono, b.mono); });
  }

  void make_monic(Vec<F>& v) const {
    if (v.empty() || k_.is_one(v.front().coeff)) return;
    Coeff inv = k_.inv(v.front().coeff);
    for (auto& t : v) t.coeff = k_.mul(t.coeff, inv);
  }

  /// a - c * m * b, all sorted by the engine order.
  Vec<F> sub_mul(const Vec<F>& a, const Vec<F>& b, const Monomial& m, const Coeff& c) const {
    Vec<F> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int cmp;
      Monomial bm;
      if (j < b.size()) bm = b[j].mono * m;
      if (i == a.size()) {
        cmp = -1;
      } else if (j == b.size()) {
        cmp = 1;
      } else {
        cmp = order_.compare(a[i].mono, bm);
      }
      if (cmp > 0) {
        r.push_back(a[i++]);
      } else if (cmp < 0) {
        r.push_back({bm, k_.neg(k_.mul(c, b[j].coeff))});
        ++j;
      } else {
        Coeff v = k_.sub(a[i].coeff, k_.mul(c, b[j].coeff));
        if (!k_.is_zero(v)) r.push_back({a[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  /// Index of a basis element whose leading monomial divides m, or -1.
  long find_reducer(const Monomial& m, const std::vector<Vec<F>>& basis, const std::vector<char>& active) const {
    for (std::size_t g = 0; g < basis.size(); ++g) {
      if (active[g] && basis[g].front().mono.divides(m)) return static_cast<long>(g);
    }
    return -1;
  }

  /// Full normal form of f modulo the active basis elements.
  Vec<F> reduce(Vec<F> f, const std::vector<Vec<F>>& basis, const std::vector<char>& active) {
    Vec<F> done;
    while (!f.empty()) {
      long g = find_reducer(f.front().mono, basis, active);
      if (g < 0) {
        done.push_back(f.front());
        f.erase(f.begin());
        continue;
      }
      const auto& b = basis[static_cast<std::size_t>(g)];
      Monomial q = f.front().mono / b.front().mono;
      Coeff c = k_.div(f.front().coeff, b.front().coeff);
      f = sub_mul(f, b, q, c);
      ++stats_.reduction_steps;
    }
    return done;
  }

  Vec<F> spoly(const Vec<F>& a, const Vec<F>& b) const {
    Monomial l = a.front().mono.lcm(b.front().mono);
    Monomial ma = l / a.front().mono, mb = l / b.front().mono;
    Vec<F> sa;
    sa.reserve(a.size());
    Coeff ia = k_.inv(a.front().coeff);
    for (const auto& t : a) sa.push_back({t.mono * ma, k_.mul(t.coeff, ia)});
    return sub_mul(sa, b, mb, k_.inv(b.front().coeff));
  }

  /// Reduced Gröbner basis of the nonzero inputs.
  std::vector<Vec<F>> buchberger(std::vector<Vec<F>> input) {
    std::vector<Vec<F>> basis;
    std::vector<char> active;
    struct Pair {
      std::size_t i, j;
      Monomial lcm;
    };
    std::vector<Pair> pairs;

    auto lt = [&](std::size_t i) -> const Monomial& { return basis[i].front().mono; };

    auto update = [&](std::size_t h) {
      // Gebauer–Möller installation of basis[h].
      std::vector<Pair> fresh;
      for (std::size_t g = 0; g < h; ++g) {
        if (!active[g] || lt(g).component() != lt(h).component()) continue;
        fresh.push_back({g, h, lt(g).lcm(lt(h))});
        ++stats_.pairs_created;
      }
      // Drop (g,h) when another (g',h) has an lcm properly dividing it, or an
      // equal lcm earlier in the list.
      std::vector<char> keep(fresh.size(), 1);
      for (std::size_t a = 0; a < fresh.size(); ++a) {
        for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b) {
          if (a == b || !keep[b]) continue;
          if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[a].lcm == fresh[b].lcm && b > a)) {
            keep[a] = 0;
          }
        }
      }
      std::vector<Pair> kept_fresh;
      for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (!keep[a]) {
          ++stats_.pairs_pruned;
          continue;
        }
        if (!module_ && lt(fresh[a].i).coprime(lt(h))) {
          ++stats_.pairs_pruned;
          continue;
        }
        kept_fresh.push_back(fresh[a]);
      }
      // Old pairs whose lcm is strictly divisible by LT(h) in a way that h
      // chains them are redundant.
      std::vector<Pair> old;
      for (const auto& p : pairs) {
        bool redundant = lt(h).divides(p.lcm) && !(lt(p.i).lcm(lt(h)) == p.lcm) && !(lt(p.j).lcm(lt(h)) == p.lcm);
        if (redundant) {
          ++stats_.pairs_pruned;
        } else {
          old.push_back(p);
        }
      }
      pairs = std::move(old);
      pairs.insert(pairs.end(), kept_fresh.begin(), kept_fresh.end());
      for (std::size_t g = 0; g < h; ++g) {
        if (active[g] && lt(h).divides(lt(g))) active[g] = 0;
      }
    };

    auto add = [&](Vec<F> v) {
      make_monic(v);
      basis.push_back(std::move(v));
      active.push_back(1);
      update(basis.size() - 1);
    };

    // Seed with the (inter-reduced as they arrive) inputs.
    for (auto& f : input) {
      sort(f);
      auto r = reduce(std::move(f), basis, active);
      if (!r.empty()) add(std::move(r));
    }

    while (!pairs.empty()) {
      // Normal strategy: smallest lcm, degree first.
      auto best = pairs.begin();
      for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
        if (it->lcm.degree() < best->lcm.degree() ||
            (it->lcm.degree() == best->lcm.degree() && order_.greater(best->lcm, it->lcm))) {
          best = it;
        }
      }
      Pair p = *best;
      pairs.erase(best);
      if (++stats_.pairs_reduced > budget_.max_pairs) {
        throw BudgetExceeded("Gröbner pair budget exceeded (" + std::to_string(budget_.max_pairs) + ")");
      }
      if (p.lcm.degree() > budget_.max_degree) {
        throw BudgetExceeded("Gröbner degree budget exceeded (" + std::to_string(budget_.max_degree) + ")");
      }
      auto r = reduce(spoly(basis[p.i], basis[p.j]), basis, active);
      if (auto* os = gb_trace_stream()) {
        *os << "pair (" << p.i << "," << p.j << ") lcm " << p.lcm.to_string() << " -> "
            << (r.empty() ? "0" : "new element of degree " + std::to_string(r.front().mono.degree())) << '\n';
      }
      if (r.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      add(std::move(r));
    }

    // Minimal basis, then tail-reduce each element against the others.
    std::vector<Vec<F>> minimal;
    for (std::size_t g = 0; g < basis.size(); ++g) {
      if (active[g]) minimal.push_back(basis[g]);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Vec<F>& a, const Vec<F>& b) { return order_.greater(b.front().mono, a.front().mono); });
    std::vector<char> all(minimal.size(), 1);
    for (std::size_t g = 0; g < minimal.size(); ++g) {
      all[g] = 0;
      Vec<F> head{minimal[g].front()};
      Vec<F> tail(minimal[g].begin() + 1, minimal[g].end());
      auto red = reduce(std::move(tail), minimal, all);
      head.insert(head.end(), red.begin(), red.end());
      minimal[g] = std::move(head);
      make_monic(minimal[g]);
      all[g] = 1;
    }
    if (auto* os = gb_trace_stream()) {
      *os << "basis size " << minimal.size() << ", pairs reduced " << stats_.pairs_reduced << ", zero reductions "
          << stats_.zero_reductions << ", pruned " << stats_.pairs_pruned << '\n';
    }
    return minimal;
  }

 private:
  F k_;
  MonomialOrder order_;
  bool module_;
  Budget budget_;
  GbStats stats_;
};

template <CoefficientField F>
Vec<F> to_vec(const Polynomial<F>& p, std::uint32_t component = 0) {
  Vec<F> v(p.terms().begin(), p.terms().end());
  for (auto& t : v) t.mono.set_component(component);
  return v;
}

template <CoefficientField F>
Polynomial<F> from_vec(const F& field, std::size_t nvars, const Vec<F>& v) {
  std::vector<Term<F>> ts(v.begin(), v.end());
  for (auto& t : ts) t.mono.set_component(0);
  return Polynomial<F>::from_terms(field, nvars, std::move(ts));
}

}  // namespace gb_detail

/// Leading monomial of a nonzero polynomial with respect to `order`.
template <CoefficientField F>
Monomial leading_monomial(const Polynomial<F>& p, const MonomialOrder& order) {
  if (p.is_zero()) throw PreconditionError("leading_monomial of zero");
  const Monomial* best = &p.terms().front().mono;
  for (const auto& t : p.terms()) {
    if (order.greater(t.mono, *best)) best = &t.mono;
  }
  return *best;
}

/// Reduced Gröbner basis (monic), sorted by increasing leading monomial.
template <CoefficientField F>
std::vector<Polynomial<F>> groebner_basis(const std::vector<Polynomial<F>>& gens, const MonomialOrder& order = {},
                                          const Budget& budget = {}, GbStats* stats = nullptr) {
  if (gens.empty()) return {};
  const F& k = gens.front().field();
  std::size_t n = gens.front().nvars();
  gb_detail::Engine<F> eng(k, order, false, budget);
  std::vector<gb_detail::Vec<F>> in;
  for (const auto& g : gens) {
    if (g.nvars() != n) throw PreconditionError("groebner_basis: generators in different rings");
    if (!g.is_zero()) in.push_back(gb_detail::to_vec(g));
  }
  auto out = eng.buchberger(std::move(in));
  if (stats) *stats = eng.stats();
  std::vector<Polynomial<F>> basis;
  basis.reserve(out.size());
  for (const auto& v : out) basis.push_back(gb_detail::from_vec(k, n, v));
  return basis;
}

/// Normal form of f with respect to a Gröbner basis for `order`.
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis,
                          const MonomialOrder& order = {}) {
  if (basis.empty() || f.is_zero()) return f;
  gb_detail::Engine<F> eng(f.field(), order, false, Budget{});
  std::vector<gb_detail::Vec<F>> bv;
  for (const auto& b : basis) {
    auto v = gb_detail::to_vec(b);
    eng.sort(v);
    bv.push_back(std::move(v));
  }
  auto fv = gb_detail::to_vec(f);
  eng.sort(fv);
  std::vector<char> active(bv.size(), 1);
  return gb_detail::from_vec(f.field(), f.nvars(), eng.reduce(std::move(fv), bv, active));
}

/// Height of an ideal, +infinity for the unit ideal.
class ExtendedHeight {
 public:
  ExtendedHeight() = default;
  explicit ExtendedHeight(long v) : value_(v) {}
  static ExtendedHeight infinite() {
    ExtendedHeight h;
    h.infinite_ = true;
    return h;
  }
  bool is_infinite() const { return infinite_; }
  long value() const {
    if (infinite_) throw std::logic_error("infinite height has no finite value");
    return value_;
  }
  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend bool operator==(const ExtendedHeight& a, const ExtendedHeight& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator<(const ExtendedHeight& a, const ExtendedHeight& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtendedHeight& a, const ExtendedHeight& b) { return !(b < a); }
  friend bool operator>=(const ExtendedHeight& a, const ExtendedHeight& b) { return !(a < b); }
  friend bool operator>(const ExtendedHeight& a, const ExtendedHeight& b) { return b < a; }

 private:
  long value_ = 0;
  bool infinite_ = false;
};

/// Finitely generated ideal of K[x1..xN]. Gröbner bases are memoized per
/// order; the memo is shared between copies and guarded for concurrent readers.
template <CoefficientField F>
class Ideal {
 public:
  using Poly = Polynomial<F>;

  Ideal(F field, std::size_t nvars, std::vector<Poly> gens = {})
      : field_(std::move(field)), nvars_(nvars), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (g.nvars() != nvars_) throw PreconditionError("Ideal: generator in a different ring");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }
  static Ideal unit(F field, std::size_t nvars) {
    return Ideal(field, nvars, {Poly::constant(field, nvars, field.one())});
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  std::vector<Poly> basis(const MonomialOrder& order = {}, const Budget& budget = {}) const {
    auto key = order.key();
    {
      std::lock_guard lock(cache_->mu);
      auto it = cache_->bases.find(key);
      if (it != cache_->bases.end()) return *it->second;
    }
    // Computed outside the lock; a concurrent duplicate computation produces
    // the same reduced basis, and the first insertion wins.
    auto b = std::make_shared<const std::vector<Poly>>(groebner_basis(gens_, order, budget));
    std::lock_guard lock(cache_->mu);
    auto [it, inserted] = cache_->bases.emplace(key, std::move(b));
    return *it->second;
  }

  bool is_unit(const Budget& budget = {}) const {
    const auto& b = basis(MonomialOrder{}, budget);
    return b.size() == 1 && b.front().is_unit();
  }
  bool contains(const Poly& f, const Budget& budget = {}) const {
    return normal_form(f, basis(MonomialOrder{}, budget)).is_zero();
  }
  bool contains(const Ideal& o, const Budget& budget = {}) const {
    return std::all_of(o.gens_.begin(), o.gens_.end(), [&](const Poly& g) { return contains(g, budget); });
  }
  bool same_as(const Ideal& o, const Budget& budget = {}) const { return contains(o, budget) && o.contains(*this, budget); }

  Ideal operator+(const Ideal& o) const {
    auto g = gens_;
    g.insert(g.end(), o.gens_.begin(), o.gens_.end());
    return Ideal(field_, nvars_, std::move(g));
  }
  Ideal operator*(const Ideal& o) const {
    std::vector<Poly> g;
    for (const auto& a : gens_) {
      for (const auto& b : o.gens_) g.push_back(a * b);
    }
    return Ideal(field_, nvars_, std::move(g));
  }

 private:
  struct Cache {
    std::mutex mu;
    std::unordered_map<std::string, std::shared_ptr<const std::vector<Poly>>> bases;
  };
  F field_;
  std::size_t nvars_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

namespace gb_detail {

/// Largest set of variables containing the support of no leading monomial.
inline std::size_t max_independent_set(std::size_t nvars, const std::vector<std::uint64_t>& supports) {
  std::size_t best = 0;
  auto independent = [&](std::uint64_t s) {
    return std::none_of(supports.begin(), supports.end(), [&](std::uint64_t m) { return (m & s) == m; });
  };
  // Depth-first over include/exclude decisions with a size bound.
  auto dfs = [&](auto&& self, std::size_t var, std::uint64_t set, std::size_t size) -> void {
    if (size + (nvars - var) <= best) return;
    if (var == nvars) {
      best = size;
      return;
    }
    std::uint64_t with = set | (std::uint64_t{1} << var);
    if (independent(with)) self(self, var + 1, with, size + 1);
    self(self, var + 1, set, size);
  };
  dfs(dfs, 0, 0, 0);
  return best;
}

}  // namespace gb_detail

/// Krull dimension of R/I from the leading-term ideal; -1 for the unit ideal.
template <CoefficientField F>
int ideal_dimension(const Ideal<F>& I, const Budget& budget = {}) {
  if (I.is_zero()) return static_cast<int>(I.nvars());
  const auto& b = I.basis(MonomialOrder{}, budget);
  std::vector<std::uint64_t> supports;
  for (const auto& g : b) {
    if (g.is_unit()) return -1;
    const auto& m = g.leading_term().mono;
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < I.nvars(); ++i) {
      if (m[i] != 0) s |= std::uint64_t{1} << i;
    }
    supports.push_back(s);
  }
  return static_cast<int>(gb_detail::max_independent_set(I.nvars(), supports));
}

template <CoefficientField F>
ExtendedHeight height(const Ideal<F>& I, const Budget& budget = {}) {
  int d = ideal_dimension(I, budget);
  if (d < 0) return ExtendedHeight::infinite();
  return ExtendedHeight(static_cast<long>(I.nvars()) - d);
}

/// Exact quotient h / g; throws if g does not divide h.
template <CoefficientField F>
Polynomial<F> divide_exact(const Polynomial<F>& h, const Polynomial<F>& g) {
  if (g.is_zero()) throw PreconditionError("divide_exact: division by zero");
  const F& k = h.field();
  Polynomial<F> rem = h, quot(k, h.nvars());
  const auto& lt = g.leading_term();
  auto inv = k.inv(lt.coeff);
  while (!rem.is_zero()) {
    const auto& r = rem.leading_term();
    if (!lt.mono.divides(r.mono)) throw std::domain_error("divide_exact: not divisible");
    auto q = Polynomial<F>::monomial(k, r.mono / lt.mono, k.mul(r.coeff, inv));
    quot += q;
    rem -= q * g;
  }
  return quot;
}

namespace gb_detail {

/// Polynomials of `gens` (in n + k variables, first k eliminated) that do not
/// involve the first k variables, shifted back to n variables.
template <CoefficientField F>
std::vector<Polynomial<F>> eliminate_prefix(const std::vector<Polynomial<F>>& gens, std::size_t k, std::size_t n,
                                            const Budget& budget) {
  auto b = groebner_basis(gens, MonomialOrder::eliminate_first(k), budget);
  std::vector<Polynomial<F>> out;
  for (const auto& g : b) {
    bool uses = false;
    for (const auto& t : g.terms()) {
      if (t.mono.partial_degree(0, k) != 0) {
        uses = true;
        break;
      }
    }
    if (uses) continue;
    std::vector<Term<F>> ts;
    for (const auto& t : g.terms()) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i + k]);
      ts.push_back({m, t.coeff});
    }
    out.push_back(Polynomial<F>::from_terms(g.field(), n, std::move(ts)));
  }
  return out;
}

}  // namespace gb_detail

/// I ∩ J via a tag variable t: (tI + (1-t)J) ∩ R.
template <CoefficientField F>
Ideal<F> intersection(const Ideal<F>& I, const Ideal<F>& J, const Budget& budget = {}) {
  if (I.nvars() != J.nvars()) throw PreconditionError("intersection: different rings");
  const F& k = I.field();
  std::size_t n = I.nvars();
  if (I.is_zero() || J.is_zero()) return Ideal<F>(k, n);
  auto t = Polynomial<F>::variable(k, n + 1, 0);
  auto one = Polynomial<F>::constant(k, n + 1, k.one());
  std::vector<Polynomial<F>> gens;
  for (const auto& f : I.generators()) gens.push_back(t * f.embed(n + 1, 1));
  for (const auto& g : J.generators()) gens.push_back((one - t) * g.embed(n + 1, 1));
  return Ideal<F>(k, n, gb_detail::eliminate_prefix(gens, 1, n, budget));
}

/// I : (f) = (1/f)(I ∩ (f)).
template <CoefficientField F>
Ideal<F> colon_principal(const Ideal<F>& I, const Polynomial<F>& f, const Budget& budget = {}) {
  const F& k = I.field();
  if (f.is_zero()) return Ideal<F>::unit(k, I.nvars());
  auto meet = intersection(I, Ideal<F>(k, I.nvars(), {f}), budget);
  std::vector<Polynomial<F>> gens;
  for (const auto& h : meet.generators()) gens.push_back(divide_exact(h, f));
  return Ideal<F>(k, I.nvars(), std::move(gens));
}

/// {f : fJ ⊆ I}.
template <CoefficientField F>
Ideal<F> colon_ideal(const Ideal<F>& I, const Ideal<F>& J, const Budget& budget = {}) {
  if (I.nvars() != J.nvars()) throw PreconditionError("colon_ideal: different rings");
  const F& k = I.field();
  std::optional<Ideal<F>> acc;
  for (const auto& g : J.generators()) {
    auto c = colon_principal(I, g, budget);
    acc = acc ? intersection(*acc, c, budget) : c;
  }
  if (!acc) return Ideal<F>::unit(k, I.nvars());  // I : 0 = R
  return Ideal<F>(k, I.nvars(), acc->basis(MonomialOrder{}, budget));
}

/// I : f^∞ via the inverse tag: (I + (1 - t f)) ∩ R.
template <CoefficientField F>
Ideal<F> saturation(const Ideal<F>& I, const Polynomial<F>& f, const Budget& budget = {}) {
  if (f.is_zero()) throw PreconditionError("saturation: f must be nonzero");
  const F& k = I.field();
  std::size_t n = I.nvars();
  auto t = Polynomial<F>::variable(k, n + 1, 0);
  auto one = Polynomial<F>::constant(k, n + 1, k.one());
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators()) gens.push_back(g.embed(n + 1, 1));
  gens.push_back(one - t * f.embed(n + 1, 1));
  return Ideal<F>(k, n, gb_detail::eliminate_prefix(gens, 1, n, budget));
}

/// The ideal of leading (top-degree) forms of all elements of (gens):
/// homogenize by a new variable x, saturate by x, then set x = 0.
template <CoefficientField F>
Ideal<F> leading_form_ideal(const std::vector<Polynomial<F>>& gens, const Budget& budget = {}) {
  if (gens.empty()) throw PreconditionError("leading_form_ideal: no generators");
  const F& k = gens.front().field();
  std::size_t n = gens.front().nvars();
  std::vector<Polynomial<F>> hom;
  for (const auto& g : gens) {
    if (g.is_zero()) throw PreconditionError("leading_form_ideal: zero generator");
    if (g.is_unit()) return Ideal<F>::unit(k, n);
    hom.push_back(homogenize(g).poly());
  }
  auto x = Polynomial<F>::variable(k, n + 1, n);
  auto sat = saturation(Ideal<F>(k, n + 1, std::move(hom)), x, budget);
  std::vector<Polynomial<F>> out;
  for (const auto& g : sat.basis(MonomialOrder{}, budget)) {
    auto r = drop_last_variable_at_zero(g);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return Ideal<F>(k, n, std::move(out));
}

}  // namespace fst
