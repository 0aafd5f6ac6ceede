#include "sumsets/run_set.hpp"

#include <algorithm>
#include <sstream>

#include "sumsets/error.hpp"

namespace sumsets {

RunSet::RunSet(std::vector<Run> runs) : runs_(std::move(runs)) {
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (runs_[i].lo > runs_[i].hi) throw PreconditionError("run with lo > hi");
    // next.lo >= prev.hi + 2, written to avoid overflow at the top of the range
    if (i > 0 && (runs_[i].lo <= runs_[i - 1].hi || runs_[i].lo - runs_[i - 1].hi < 2)) {
      throw PreconditionError("runs must be sorted, disjoint and non-adjacent");
    }
  }
}

RunSet RunSet::from_intervals(std::vector<Run> intervals) {
  std::sort(intervals.begin(), intervals.end());
  std::vector<Run> merged;
  merged.reserve(intervals.size());
  for (const Run& r : intervals) {
    if (r.lo > r.hi) throw PreconditionError("run with lo > hi");
    if (!merged.empty() && r.lo <= merged.back().hi + 1) {
      merged.back().hi = std::max(merged.back().hi, r.hi);
    } else {
      merged.push_back(r);
    }
  }
  RunSet out;
  out.runs_ = std::move(merged);
  return out;
}

RunSet RunSet::from_set(const IntSet& set) {
  std::vector<Run> runs;
  for (Int v : set) {
    if (!runs.empty() && runs.back().hi + 1 == v) {
      runs.back().hi = v;
    } else {
      runs.push_back({v, v});
    }
  }
  RunSet out;
  out.runs_ = std::move(runs);
  return out;
}

Int RunSet::cardinality() const {
  Int total = 0;
  for (const Run& r : runs_) total += r.length();
  return total;
}

Int RunSet::min() const {
  if (runs_.empty()) throw PreconditionError("empty RunSet has no minimum");
  return runs_.front().lo;
}

Int RunSet::max() const {
  if (runs_.empty()) throw PreconditionError("empty RunSet has no maximum");
  return runs_.back().hi;
}

bool RunSet::contains(Int value) const {
  auto it = std::upper_bound(runs_.begin(), runs_.end(), value,
                             [](Int v, const Run& r) { return v < r.lo; });
  if (it == runs_.begin()) return false;
  --it;
  return value <= it->hi;
}

IntSet RunSet::to_int_set() const {
  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(cardinality()));
  for (const Run& r : runs_) {
    for (Int v = r.lo;; ++v) {
      values.push_back(v);
      if (v == r.hi) break;
    }
  }
  return IntSet(std::move(values));
}

std::string RunSet::to_string() const {
  if (runs_.empty()) return "{}";
  std::ostringstream out;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (i) out << ", ";
    out << runs_[i].lo;
    if (runs_[i].hi != runs_[i].lo) out << ".." << runs_[i].hi;
  }
  return out.str();
}

std::vector<Int> RunSet::holes() const {
  std::vector<Int> out;
  for (std::size_t i = 1; i < runs_.size(); ++i) {
    for (Int v = runs_[i - 1].hi + 1; v < runs_[i].lo; ++v) out.push_back(v);
  }
  return out;
}

}  // namespace sumsets
