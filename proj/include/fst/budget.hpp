#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace fst {

/// Caps on potentially long computations. Hitting one is reported as
/// BudgetExceeded, never as a (possibly wrong) answer.
struct Budget {
  std::size_t max_pairs = 200000;
  unsigned max_degree = 64;
  /// Cap on candidates tried by exhaustive enumerations (collapse search,
  /// bound recursions).
  std::uint64_t max_enumeration = 50000000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fst
