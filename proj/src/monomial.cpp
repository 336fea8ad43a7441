#include "fst/monomial.hpp"

#include <algorithm>
#include <limits>

#include "fst/field.hpp"

namespace fst {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Monomial::Monomial(std::size_t nvars, std::span<const int> exps) : Monomial(nvars) {
  if (exps.size() != nvars) throw std::invalid_argument("exponent vector length mismatch");
  for (std::size_t i = 0; i < nvars; ++i) {
    if (exps[i] < 0) throw std::invalid_argument("negative exponent");
    set(i, static_cast<unsigned>(exps[i]));
  }
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw std::out_of_range("variable index out of range");
  if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<Exponent>(e);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) {
    unsigned e = static_cast<unsigned>(exps_[i]) + o.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + o.degree_;
  r.component_ = component_ + o.component_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] - o.exps_[i]);
  r.degree_ = degree_ - o.degree_;
  r.component_ = component_ - o.component_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_ || component_ != o.component_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.set(i, std::max(exps_[i], o.exps_[i]));
  r.component_ = component_;
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.set(i, std::min(exps_[i], o.exps_[i]));
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  }
  return true;
}

std::uint32_t Monomial::partial_degree(std::size_t lo, std::size_t hi) const {
  std::uint32_t d = 0;
  for (std::size_t i = lo; i < hi && i < nvars_; ++i) d += exps_[i];
  return d;
}

bool Monomial::operator==(const Monomial& o) const {
  if (nvars_ != o.nvars_ || degree_ != o.degree_ || component_ != o.component_) return false;
  return std::equal(exps_.begin(), exps_.begin() + nvars_, o.exps_.begin());
}

std::size_t Monomial::hash() const {
  std::size_t h = component_ * 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < nvars_; ++i) h = (h ^ exps_[i]) * 0x100000001b3ULL;
  return h;
}

std::string Monomial::to_string() const {
  if (degree_ == 0) return "1";
  std::string s;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
  }
  return s;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int grevlex_block_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  auto da = a.partial_degree(lo, hi), db = b.partial_degree(lo, hi);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

void fill_degree(std::size_t nvars, std::size_t var, unsigned remaining, Monomial& cur,
                 std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.set(var, e);
    fill_degree(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  fill_degree(nvars, 0, d, cur, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
  return out;
}

}  // namespace fst
