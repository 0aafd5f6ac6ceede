#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sumsets {

using Int = std::int64_t;

/// Finite set of integers kept as a strictly increasing sequence.
class IntSet {
 public:
  IntSet() = default;
  /// Throws PreconditionError unless `elements` is strictly increasing.
  explicit IntSet(std::vector<Int> elements);
  IntSet(std::initializer_list<Int> elements);

  /// Sorts and drops duplicates.
  static IntSet from_unsorted(std::vector<Int> elements);

  std::span<const Int> elements() const { return elements_; }
  const std::vector<Int>& vector() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  Int operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  /// Throw PreconditionError on an empty set.
  Int min() const;
  Int max() const;

  bool contains(Int value) const;

  /// "{0, 1, 5}"
  std::string to_string() const;

  friend auto operator<=>(const IntSet&, const IntSet&) = default;
  friend bool operator==(const IntSet&, const IntSet&) = default;

 private:
  std::vector<Int> elements_;
};

}  // namespace sumsets
