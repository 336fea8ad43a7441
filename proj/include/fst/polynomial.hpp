#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fst/field.hpp"
#include "fst/monomial.hpp"

namespace fst {

template <CoefficientField F>
struct Term {
  Monomial mono;
  typename F::value_type coeff;
};

/// Sparse polynomial in x1..xN over F. Terms are stored in descending grevlex
/// order with no zero coefficients, so structural equality is mathematical
/// equality.
template <CoefficientField F>
class Polynomial {
 public:
  using Coeff = typename F::value_type;
  using TermT = Term<F>;

  Polynomial(F field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  static Polynomial constant(F field, std::size_t nvars, Coeff c) {
    Polynomial p(field, nvars);
    if (!p.field_.is_zero(c)) p.terms_.push_back({Monomial(nvars), std::move(c)});
    return p;
  }
  static Polynomial variable(F field, std::size_t nvars, std::size_t i) {
    Polynomial p(field, nvars);
    p.terms_.push_back({Monomial::variable(nvars, i), p.field_.one()});
    return p;
  }
  static Polynomial monomial(F field, Monomial m, Coeff c) {
    std::size_t n = m.nvars();
    Polynomial p(field, n);
    if (!p.field_.is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  /// Builds from arbitrary (possibly repeated, unsorted, zero) terms.
  static Polynomial from_terms(F field, std::size_t nvars, std::vector<TermT> terms) {
    Polynomial p(field, nvars);
    std::sort(terms.begin(), terms.end(),
              [](const TermT& a, const TermT& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = p.field_.add(p.terms_.back().coeff, t.coeff);
        if (p.field_.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!p.field_.is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<TermT>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Nonzero constant, i.e. a unit of the polynomial ring.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }
  int min_degree() const {
    int d = -1;
    for (const auto& t : terms_) {
      int td = static_cast<int>(t.mono.degree());
      if (d < 0 || td < d) d = td;
    }
    return d;
  }
  bool is_homogeneous() const {
    return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
  }
  const TermT& leading_term() const { return terms_.front(); }

  Coeff coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.mono == m) return t.coeff;
    }
    return field_.zero();
  }

  /// Highest variable index + 1 that actually occurs.
  std::size_t support_width() const {
    std::size_t w = 0;
    for (const auto& t : terms_) {
      for (std::size_t i = w; i < nvars_; ++i) {
        if (t.mono[i] != 0) w = i + 1;
      }
    }
    return w;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    std::vector<TermT> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, field_.mul(a.coeff, b.coeff)});
    }
    return from_terms(field_, nvars_, std::move(prod));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Coeff& c) const {
    if (field_.is_zero(c)) return Polynomial(field_, nvars_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
  }
  Polynomial times_monomial(const Monomial& m, const Coeff& c) const {
    if (field_.is_zero(c)) return Polynomial(field_, nvars_);
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size());
    // Multiplication by a monomial preserves grevlex order.
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
    return r;
  }
  /// Scales so the leading coefficient is 1.
  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return scaled(field_.inv(terms_.front().coeff));
  }
  Polynomial pow(unsigned e) const {
    Polynomial r = constant(field_, nvars_, field_.one());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  bool operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
    }
    return true;
  }

  /// Degree-d homogeneous component (possibly zero).
  Polynomial homogeneous_component(unsigned d) const {
    Polynomial r(field_, nvars_);
    for (const auto& t : terms_) {
      if (t.mono.degree() == d) r.terms_.push_back(t);
    }
    return r;
  }

  /// Reinterprets in a ring with `new_nvars` variables, moving variable i to
  /// i + shift. Requires every occurring variable to fit.
  Polynomial embed(std::size_t new_nvars, std::size_t shift = 0) const {
    std::vector<TermT> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(new_nvars);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (t.mono[i] == 0) continue;
        if (i + shift >= new_nvars) throw std::out_of_range("embed: variable does not fit");
        m.set(i + shift, t.mono[i]);
      }
      ts.push_back({m, t.coeff});
    }
    return from_terms(field_, new_nvars, std::move(ts));
  }

  /// Substitutes polynomials (all in one target ring) for the variables.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars_) throw PreconditionError("substitute: need one image per variable");
    if (images.empty()) return *this;
    const F& f = field_;
    std::size_t tn = images.front().nvars();
    Polynomial r(f, tn);
    for (const auto& t : terms_) {
      Polynomial term = constant(f, tn, t.coeff);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (t.mono[i] != 0) term = term * images[i].pow(t.mono[i]);
      }
      r += term;
    }
    return r;
  }

  /// Sets variable i to the constant c.
  Polynomial specialize(std::size_t i, const Coeff& c) const {
    std::vector<TermT> ts;
    for (const auto& t : terms_) {
      Coeff v = t.coeff;
      for (unsigned k = 0; k < t.mono[i]; ++k) v = field_.mul(v, c);
      Monomial m = t.mono;
      m.set(i, 0);
      ts.push_back({m, v});
    }
    return from_terms(field_, nvars_, std::move(ts));
  }

  /// Text form in the x1..xN grammar, e.g. "3*x1^2*x2 - x3^3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      bool neg = field_.is_negative(t.coeff);
      Coeff mag = neg ? field_.neg(t.coeff) : t.coeff;
      if (first) {
        if (neg) s += '-';
      } else {
        s += neg ? " - " : " + ";
      }
      first = false;
      if (t.mono.is_one()) {
        s += field_.to_string(mag);
      } else {
        if (!field_.is_one(mag)) s += field_.to_string(mag) + "*";
        s += t.mono.to_string();
      }
    }
    return s;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw PreconditionError("polynomials live in different rings");
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_compatible(o);
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c;
      if (i == terms_.size()) {
        c = -1;
      } else if (j == o.terms_.size()) {
        c = 1;
      } else {
        c = grevlex_cmp(terms_[i].mono, o.terms_[j].mono);
      }
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? field_.neg(t.coeff) : t.coeff});
      } else {
        Coeff v = subtract ? field_.sub(terms_[i].coeff, o.terms_[j].coeff)
                           : field_.add(terms_[i].coeff, o.terms_[j].coeff);
        if (!field_.is_zero(v)) r.terms_.push_back({terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  F field_;
  std::size_t nvars_;
  std::vector<TermT> terms_;
};

/// Nonzero homogeneous polynomial of positive degree.
template <CoefficientField F>
class Form {
 public:
  explicit Form(Polynomial<F> p) : poly_(std::move(p)) {
    if (poly_.is_zero()) throw PreconditionError("a form must be nonzero");
    if (!poly_.is_homogeneous()) throw PreconditionError("a form must be homogeneous: " + poly_.to_string());
    if (poly_.degree() < 1) throw PreconditionError("a form must have positive degree");
  }
  const Polynomial<F>& poly() const { return poly_; }
  unsigned degree() const { return static_cast<unsigned>(poly_.degree()); }
  std::size_t nvars() const { return poly_.nvars(); }
  bool operator==(const Form& o) const { return poly_ == o.poly_; }

 private:
  Polynomial<F> poly_;
};

template <CoefficientField F>
Polynomial<F> partial_derivative(const Polynomial<F>& f, std::size_t i) {
  if (i >= f.nvars()) throw PreconditionError("partial_derivative: variable index out of range");
  const F& k = f.field();
  std::vector<Term<F>> ts;
  for (const auto& t : f.terms()) {
    unsigned e = t.mono[i];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(i, e - 1);
    ts.push_back({m, k.mul(t.coeff, k.from_int(e))});
  }
  return Polynomial<F>::from_terms(k, f.nvars(), std::move(ts));
}

template <CoefficientField F>
std::vector<Polynomial<F>> gradient(const Polynomial<F>& f) {
  std::vector<Polynomial<F>> g;
  g.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(partial_derivative(f, i));
  return g;
}

/// Rows are the gradients of the forms.
template <CoefficientField F>
std::vector<std::vector<Polynomial<F>>> jacobian(const std::vector<Form<F>>& forms) {
  if (forms.empty()) throw PreconditionError("jacobian: empty list");
  std::vector<std::vector<Polynomial<F>>> rows;
  for (const auto& fm : forms) {
    if (fm.nvars() != forms.front().nvars()) throw PreconditionError("jacobian: forms in different rings");
    rows.push_back(gradient(fm.poly()));
  }
  return rows;
}

/// Homogenizes with respect to the appended variable x_{N+1}.
template <CoefficientField F>
Form<F> homogenize(const Polynomial<F>& f) {
  if (f.is_zero()) throw PreconditionError("homogenize: zero polynomial");
  if (f.degree() == 0) throw PreconditionError("homogenize: constant has no form of positive degree");
  std::size_t n = f.nvars() + 1;
  unsigned d = static_cast<unsigned>(f.degree());
  std::vector<Term<F>> ts;
  for (const auto& t : f.terms()) {
    Monomial m(n);
    for (std::size_t i = 0; i < f.nvars(); ++i) m.set(i, t.mono[i]);
    m.set(n - 1, d - t.mono.degree());
    ts.push_back({m, t.coeff});
  }
  return Form<F>(Polynomial<F>::from_terms(f.field(), n, std::move(ts)));
}

/// Sets the last variable to 1 and drops it.
template <CoefficientField F>
Polynomial<F> dehomogenize(const Polynomial<F>& f) {
  if (f.nvars() == 0) throw PreconditionError("dehomogenize: no variable to drop");
  std::size_t n = f.nvars() - 1;
  std::vector<Term<F>> ts;
  for (const auto& t : f.terms()) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
    ts.push_back({m, t.coeff});
  }
  return Polynomial<F>::from_terms(f.field(), n, std::move(ts));
}

/// Top-degree homogeneous component.
template <CoefficientField F>
Polynomial<F> leading_form(const Polynomial<F>& f) {
  if (f.is_zero()) throw PreconditionError("leading_form: zero polynomial");
  return f.homogeneous_component(static_cast<unsigned>(f.degree()));
}

/// Drops the last variable after setting it to zero.
template <CoefficientField F>
Polynomial<F> drop_last_variable_at_zero(const Polynomial<F>& f) {
  std::size_t n = f.nvars() - 1;
  std::vector<Term<F>> ts;
  for (const auto& t : f.terms()) {
    if (t.mono[n] != 0) continue;
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
    ts.push_back({m, t.coeff});
  }
  return Polynomial<F>::from_terms(f.field(), n, std::move(ts));
}

}  // namespace fst
