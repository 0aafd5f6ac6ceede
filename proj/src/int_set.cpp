#include "sumsets/int_set.hpp"

#include <algorithm>
#include <sstream>

#include "sumsets/error.hpp"

namespace sumsets {

namespace {

void require_strictly_increasing(const std::vector<Int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] >= v[i]) {
      throw PreconditionError("IntSet elements must be strictly increasing");
    }
  }
}

}  // namespace

IntSet::IntSet(std::vector<Int> elements) : elements_(std::move(elements)) {
  require_strictly_increasing(elements_);
}

IntSet::IntSet(std::initializer_list<Int> elements) : elements_(elements) {
  require_strictly_increasing(elements_);
}

IntSet IntSet::from_unsorted(std::vector<Int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return IntSet(std::move(elements));
}

Int IntSet::min() const {
  if (elements_.empty()) throw PreconditionError("empty set has no minimum");
  return elements_.front();
}

Int IntSet::max() const {
  if (elements_.empty()) throw PreconditionError("empty set has no maximum");
  return elements_.back();
}

bool IntSet::contains(Int value) const {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

std::string IntSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out << ", ";
    out << elements_[i];
  }
  out << '}';
  return out.str();
}

}  // namespace sumsets
