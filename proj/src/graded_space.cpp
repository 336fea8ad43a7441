#include "fst/graded_space.hpp"

#include <numeric>
#include <stdexcept>

namespace fst {

DimensionSequence::DimensionSequence(std::vector<long> entries) : entries_(std::move(entries)) {
  for (long e : entries_) {
    if (e < 0) throw PreconditionError("dimension sequence entries must be nonnegative");
  }
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

long DimensionSequence::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }

std::strong_ordering DimensionSequence::operator<=>(const DimensionSequence& o) const {
  std::size_t n = std::max(entries_.size(), o.entries_.size());
  for (std::size_t i = n; i >= 1; --i) {
    long a = at_degree(i), b = o.at_degree(i);
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::string DimensionSequence::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

}  // namespace fst
