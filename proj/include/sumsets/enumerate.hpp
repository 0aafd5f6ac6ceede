#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "sumsets/int_set.hpp"

namespace sumsets::classify {

using SetVisitor = std::function<void(std::span<const Int>)>;

/// Visits, in lexicographic order, every k-element set with min 0, max <= max_span
/// and gcd 1. Requires k >= 2.
void for_each_normal_set(Int k, Int max_span, const SetVisitor& visit);

/// The slice of for_each_normal_set whose second-smallest element is `second`.
void for_each_normal_set_with_second(Int k, Int max_span, Int second, const SetVisitor& visit);

std::vector<IntSet> enumerate_normal_sets(Int k, Int max_span);

/// Largest second-smallest element any enumerated set can have (0 if none).
Int max_second_element(Int k, Int max_span);

/// Runs `visit(partial, set)` over all normal sets, partitioned by the
/// second-smallest element. Returns one Partial per partition in increasing
/// order of that element, so the result does not depend on `workers`.
template <class Partial, class Visit>
std::vector<Partial> scan_partitions(Int k, Int max_span, unsigned workers, Visit visit) {
  const Int last = max_second_element(k, max_span);
  std::vector<Partial> parts(static_cast<std::size_t>(std::max<Int>(last, 0)));
  if (parts.empty()) return parts;

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < parts.size(); i = next++) {
        Partial& part = parts[i];
        for_each_normal_set_with_second(k, max_span, static_cast<Int>(i) + 1,
                                        [&](std::span<const Int> set) { visit(part, set); });
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(parts.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return parts;
}

}  // namespace sumsets::classify
