#include "sumsets/enumerate.hpp"

#include <numeric>

#include "sumsets/error.hpp"

namespace sumsets::classify {

namespace {

// Picks the remaining elements in increasing order, carrying the running gcd.
void extend(std::vector<Int>& current, std::size_t target, Int max_span, Int running_gcd,
            const SetVisitor& visit) {
  if (current.size() == target) {
    if (running_gcd == 1) visit(current);
    return;
  }
  const Int remaining = static_cast<Int>(target - current.size());
  for (Int v = current.back() + 1; v + remaining - 1 <= max_span; ++v) {
    current.push_back(v);
    extend(current, target, max_span, std::gcd(running_gcd, v), visit);
    current.pop_back();
  }
}

void require_k(Int k) {
  if (k < 2) throw PreconditionError("enumeration needs k >= 2");
}

}  // namespace

Int max_second_element(Int k, Int max_span) {
  require_k(k);
  return max_span - (k - 2);
}

void for_each_normal_set_with_second(Int k, Int max_span, Int second, const SetVisitor& visit) {
  require_k(k);
  if (second < 1 || second > max_second_element(k, max_span)) return;
  std::vector<Int> current{0, second};
  current.reserve(static_cast<std::size_t>(k));
  extend(current, static_cast<std::size_t>(k), max_span, second, visit);
}

void for_each_normal_set(Int k, Int max_span, const SetVisitor& visit) {
  const Int last = max_second_element(k, max_span);
  for (Int second = 1; second <= last; ++second) for_each_normal_set_with_second(k, max_span, second, visit);
}

std::vector<IntSet> enumerate_normal_sets(Int k, Int max_span) {
  std::vector<IntSet> out;
  for_each_normal_set(k, max_span, [&](std::span<const Int> s) { out.emplace_back(std::vector<Int>(s.begin(), s.end())); });
  return out;
}

}  // namespace sumsets::classify
