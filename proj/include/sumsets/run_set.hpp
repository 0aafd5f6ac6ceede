#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sumsets/int_set.hpp"

namespace sumsets {

/// Closed interval [lo, hi].
struct Run {
  Int lo = 0;
  Int hi = 0;

  Int length() const { return hi - lo + 1; }
  friend auto operator<=>(const Run&, const Run&) = default;
};

/// Union of maximal runs: sorted, disjoint, and separated by at least one
/// missing integer. This is the exact output shape of every sumset.
class RunSet {
 public:
  RunSet() = default;
  /// Throws PreconditionError unless `runs` already satisfies the invariants.
  explicit RunSet(std::vector<Run> runs);

  /// Accepts intervals in any order, overlapping or adjacent, and merges them.
  static RunSet from_intervals(std::vector<Run> intervals);
  static RunSet from_set(const IntSet& set);

  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  Int cardinality() const;
  Int min() const;
  Int max() const;
  bool contains(Int value) const;

  IntSet to_int_set() const;
  /// "0..2, 5..8, 10..14"; single points are printed bare. Empty prints "{}".
  std::string to_string() const;

  /// Every value in [min, max] that is not in the set.
  std::vector<Int> holes() const;

  friend bool operator==(const RunSet&, const RunSet&) = default;

 private:
  std::vector<Run> runs_;
};

inline Int cardinality(const RunSet& s) { return s.cardinality(); }

}  // namespace sumsets
