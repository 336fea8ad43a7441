#pragma once

#include <cstddef>
#include <string>

#include "fst/monomial.hpp"

namespace fst {

enum class OrderKind { grevlex, lex, block };

/// Monomial order on ring or module terms. Module terms are compared
/// position-over-term: a smaller component index is larger, then the
/// underlying monomial order decides.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  /// For block orders: variables [0, split) form the dominant block; each block
  /// is compared by grevlex.
  std::size_t split = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  /// Eliminates the first `k` variables.
  static MonomialOrder eliminate_first(std::size_t k) { return {OrderKind::block, k}; }

  int compare(const Monomial& a, const Monomial& b) const {
    if (a.component() != b.component()) return a.component() < b.component() ? 1 : -1;
    switch (kind) {
      case OrderKind::grevlex:
        return grevlex_cmp(a, b);
      case OrderKind::lex:
        return lex_cmp(a, b);
      case OrderKind::block: {
        int c = grevlex_block_cmp(a, b, 0, split);
        return c != 0 ? c : grevlex_block_cmp(a, b, split, a.nvars());
      }
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool is_degree_compatible() const { return kind == OrderKind::grevlex; }

  std::string key() const {
    switch (kind) {
      case OrderKind::grevlex:
        return "grevlex";
      case OrderKind::lex:
        return "lex";
      case OrderKind::block:
        return "block:" + std::to_string(split);
    }
    return "?";
  }
  bool operator==(const MonomialOrder&) const = default;
};

}  // namespace fst
