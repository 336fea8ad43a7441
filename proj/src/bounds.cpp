#include "fst/bounds.hpp"

#include <algorithm>
#include <limits>

#include "fst/field.hpp"

namespace fst::bounds {

namespace {

long checked_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r)) throw BudgetExceeded("bound exceeds 64-bit range");
  return r;
}

long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw BudgetExceeded("bound exceeds 64-bit range");
  return r;
}

long ceil_half(long v) { return (v + 1) / 2; }

}  // namespace

BoundTable BoundTable::standard(int eta, std::uint32_t characteristic) {
  if (eta < 1) throw PreconditionError("eta must be at least 1");
  BoundTable t;
  t.eta = eta;
  t.characteristic = characteristic;
  t.base[1] = 0;
  t.base[2] = ceil_half(eta);
  t.base[3] = frak_R(eta + 2, characteristic);
  t.rule = ThresholdRule::additive;
  return t;
}

BoundTable BoundTable::fixed_thresholds(std::map<unsigned, long> thresholds) {
  BoundTable t;
  t.base = std::move(thresholds);
  t.rule = ThresholdRule::fixed;
  return t;
}

void BoundTable::validate() const {
  long prev = std::numeric_limits<long>::min();
  for (auto [d, v] : base) {
    if (d < 1) throw PreconditionError("bound table degrees start at 1");
    if (v < 0) throw PreconditionError("bound table values must be nonnegative");
    if (rule == ThresholdRule::additive && v < static_cast<long>(d) - 1) {
      throw PreconditionError("base threshold for degree " + std::to_string(d) + " must be at least " +
                              std::to_string(d - 1));
    }
    if (v < prev) throw PreconditionError("bound table must be nondecreasing in the degree");
    prev = v;
  }
}

std::string BoundTable::provenance() const {
  std::string s = rule == ThresholdRule::additive ? "threshold_i(delta) = base(i) + 3(n-1)" : "fixed thresholds";
  s += "; base {";
  bool first = true;
  for (auto [d, v] : base) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(d) + ": " + std::to_string(v);
  }
  s += "}";
  if (rule == ThresholdRule::additive) {
    s += "; eta = " + std::to_string(eta) + ", char = " + std::to_string(characteristic);
  }
  return s;
}

long eta_A_i(const DimensionSequence& delta, unsigned i, const BoundTable& table) {
  auto it = table.base.find(i);
  if (it == table.base.end()) throw MissingBound("no base threshold for degree " + std::to_string(i));
  if (table.rule == ThresholdRule::fixed) return it->second;
  long n = delta.total();
  if (n < 1) throw PreconditionError("eta_A_i needs a nonempty dimension sequence");
  return checked_add(it->second, checked_mul(3, n - 1));
}

std::pair<long, long> quadric_thresholds(long n, long eta) {
  if (n < 1) throw PreconditionError("quadric_thresholds: n must be at least 1");
  if (eta < 1) throw PreconditionError("quadric_thresholds: eta must be at least 1");
  return {n - 1, n - 1 + ceil_half(eta)};
}

long quadric_B(long n) {
  if (n < 1) throw PreconditionError("quadric_B: n must be at least 1");
  if (n + 1 >= 62) throw BudgetExceeded("quadric_B: bound exceeds 64-bit range");
  return checked_add(checked_mul(1L << (n + 1), n - 2), 4);
}

long frak_R(long b, std::uint32_t characteristic) {
  switch (characteristic) {
    case 2:
      return checked_mul(2, checked_mul(2 * b + 1, b - 1));
    case 3:
      return checked_add(checked_mul(2 * b, b), -b);
    default:
      return checked_mul(2 * b + 1, b - 1);
  }
}

std::array<long, 3> cubic_eta_A(long n1, long n2, long n3, long eta, std::uint32_t characteristic) {
  if (n1 < 0 || n2 < 0 || n3 < 0) throw PreconditionError("cubic_eta_A: entries must be nonnegative");
  if (eta < 1) throw PreconditionError("cubic_eta_A: eta must be at least 1");
  long b = 2 * (n2 + n3) + eta + (n2 != 0 ? 1 : 0);
  return {0, ceil_half(b) + n1, checked_add(frak_R(b, characteristic), n1)};
}

long default_B3(long h, unsigned e) {
  if (h < 0) throw PreconditionError("B3: h must be nonnegative");
  if (h == 0) return 0;
  switch (e) {
    case 1:
      return h;
    case 2:
      return std::max(h, quadric_B(h));
    default:
      throw MissingBound("no default B3 for forms of degree " + std::to_string(e));
  }
}

long phi(long h, unsigned d, const B3Function& b3) {
  if (d < 2) throw PreconditionError("phi: degree must be at least 2");
  return checked_add(b3(h, d - 1), 1);
}

std::optional<long> phi_euler(long h, unsigned d, std::uint32_t characteristic) {
  if (characteristic != 0 && d % characteristic == 0) return std::nullopt;
  return h;
}

namespace {

class Recursion {
 public:
  Recursion(const BoundTable& table, const Budget& budget, RecursionStats* stats)
      : table_(table), budget_(budget), stats_(stats) {}

  long eval(const DimensionSequence& delta) {
    auto it = memo_.find(delta.entries());
    if (it != memo_.end()) {
      if (stats_) ++stats_->memo_hits;
      return it->second;
    }
    if (++nodes_ > budget_.max_enumeration) {
      throw BudgetExceeded("bound recursion exceeded " + std::to_string(budget_.max_enumeration) + " states");
    }
    if (stats_) ++stats_->nodes;
    long best = delta.total();
    for (unsigned i = 2; i <= delta.max_degree(); ++i) {
      if (delta.at_degree(i) == 0) continue;
      long k = eta_A_i(delta, i, table_);
      if (k == 0) continue;  // no 0-collapse exists
      std::vector<long> next = delta.entries();
      next[i - 1] -= 1;
      long extra = checked_mul(2, k);
      distribute(next, 0, i - 1, extra, best);
    }
    memo_.emplace(delta.entries(), best);
    return best;
  }

 private:
  // Every composition of `remaining` into slots [slot, upto).
  void distribute(std::vector<long>& seq, std::size_t slot, std::size_t upto, long remaining, long& best) {
    if (slot + 1 == upto) {
      seq[slot] += remaining;
      best = std::max(best, eval(DimensionSequence(seq)));
      seq[slot] -= remaining;
      return;
    }
    for (long put = 0; put <= remaining; ++put) {
      seq[slot] += put;
      distribute(seq, slot + 1, upto, remaining - put, best);
      seq[slot] -= put;
    }
  }

  const BoundTable& table_;
  Budget budget_;
  RecursionStats* stats_;
  std::uint64_t nodes_ = 0;
  std::map<std::vector<long>, long> memo_;
};

}  // namespace

long B_recursion(const DimensionSequence& delta, const BoundTable& table, const Budget& budget,
                 RecursionStats* stats) {
  table.validate();
  return Recursion(table, budget, stats).eval(delta);
}

long stillman_C(long m, long n, unsigned d, const BoundTable& table, const Budget& budget, RecursionStats* stats) {
  if (m < 1 || n < 1 || d < 1) throw PreconditionError("stillman_C: m, n, d must be positive");
  table.validate();
  long total = checked_mul(checked_mul(m, n), d);
  Recursion rec(table, budget, stats);
  long best = 0;
  std::vector<long> seq(d, 0);
  auto walk = [&](auto&& self, std::size_t slot, long remaining) -> void {
    if (slot + 1 == d) {
      seq[slot] = remaining;
      best = std::max(best, rec.eval(DimensionSequence(seq)));
      seq[slot] = 0;
      return;
    }
    for (long put = 0; put <= remaining; ++put) {
      seq[slot] = put;
      self(self, slot + 1, remaining - put);
    }
    seq[slot] = 0;
  };
  walk(walk, 0, total);
  return best;
}

}  // namespace fst::bounds
