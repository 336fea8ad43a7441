#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "fst/budget.hpp"
#include "fst/graded_space.hpp"

// Explicit strength thresholds and subalgebra-size bounds: closed forms for
// quadrics and cubics, the per-degree threshold formula, and the recursions
// over dimension sequences.
namespace fst::bounds {

/// A bound the tables cannot supply (e.g. a base value for degree >= 4).
class MissingBound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class ThresholdRule {
  /// threshold_i(δ) = base(i) + 3(n - 1), n = Σδ.
  additive,
  /// threshold_i(δ) = base(i), independent of δ.
  fixed,
};

struct BoundTable {
  /// Per-degree base strength thresholds.
  std::map<unsigned, long> base;
  int eta = 1;
  std::uint32_t characteristic = 0;
  ThresholdRule rule = ThresholdRule::additive;

  /// Base values for degrees 1..3: 0 for linear forms, ceil(eta/2) for a
  /// single quadric, R(eta + 2) for a single cubic.
  static BoundTable standard(int eta, std::uint32_t characteristic);
  static BoundTable fixed_thresholds(std::map<unsigned, long> thresholds);

  /// Checks nonnegativity, base(d) >= d - 1, and monotonicity in d.
  void validate() const;
  std::string provenance() const;
};

/// base(i) + 3(n - 1) under the additive rule, base(i) under the fixed rule.
long eta_A_i(const DimensionSequence& delta, unsigned i, const BoundTable& table);

/// Strength thresholds for a space of n quadrics: (n - 1) for every
/// independent sequence to be regular, n - 1 + ceil(eta/2) for R_eta.
std::pair<long, long> quadric_thresholds(long n, long eta);

/// 2^{n+1}(n - 2) + 4: generators needed for a space of n quadrics.
long quadric_B(long n);

/// R(b) = (2b+1)(b-1), doubled in characteristic 2, and 2b^2 - b in
/// characteristic 3.
long frak_R(long b, std::uint32_t characteristic);

/// Thresholds (degree 1, 2, 3) for a space with n1 linear, n2 quadratic and
/// n3 cubic forms: (0, ceil(b/2) + n1, R(b) + n1), where
/// b = 2(n2 + n3) + eta, plus one when n2 != 0.
std::array<long, 3> cubic_eta_A(long n1, long n2, long n3, long eta, std::uint32_t characteristic);

/// Bound on generators needed for a space of h forms of degree <= e.
using B3Function = std::function<long(long h, unsigned e)>;

/// Default B3: h for linear spaces, max(h, quadric_B(h)) for quadrics, 0 for
/// h = 0; throws MissingBound for e >= 3.
long default_B3(long h, unsigned e);

/// B3(h, d - 1) + 1.
long phi(long h, unsigned d, const B3Function& b3 = default_B3);
/// When the characteristic does not divide d, h already works (Euler's
/// formula puts F in the ideal of its partials). Returns nullopt otherwise.
std::optional<long> phi_euler(long h, unsigned d, std::uint32_t characteristic);

struct RecursionStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
};

/// Upper bound on the number of generators reached by descent from δ: the
/// maximum of n = Σδ and the bound at every sequence obtained by collapsing
/// one degree-i element (δ_i - 1) and distributing 2·threshold_i(δ) new forms
/// over the lower degrees in every possible way.
long B_recursion(const DimensionSequence& delta, const BoundTable& table, const Budget& budget = {},
                 RecursionStats* stats = nullptr);

/// max B_recursion(δ) over sequences of length <= d with Σδ = m·n·d.
long stillman_C(long m, long n, unsigned d, const BoundTable& table, const Budget& budget = {},
                RecursionStats* stats = nullptr);

}  // namespace fst::bounds
