#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sumsets/int_set.hpp"

namespace sumsets::bounds {

enum class BoundKind { nathanson, freiman_2a, lev_step, lev_chain };

std::string_view to_string(BoundKind kind);

/// A lower bound for |hA| together with the inputs it was evaluated at.
struct BoundReport {
  BoundKind kind;
  Int value = 0;
  Int h = 0;
  Int k = 0;
  Int a_last = 0;
};

/// hk - h + 1, attained exactly by arithmetic progressions.
Int nathanson_lower(Int h, Int k);

/// Lower bound for |2A| of a normal-form set with k >= 3 elements and
/// largest element a_last: k + a_last up to a_last = 2k - 3, then 3k - 3.
Int freiman_2a_lower(Int k, Int a_last);

/// prev_card + min(a_last, h(k-2) + 1), bounding |hA| from |(h-1)A|.
Int lev_step_lower(Int h, Int k, Int a_last, Int prev_card);

/// The step bound telescoped down to |A| = k:
/// k + sum_{i=2..h} min(a_last, i(k-2) + 1). Nondecreasing in a_last.
Int lev_chain_lower(Int h, Int k, Int a_last);

/// Largest span L with lev_chain_lower(h, k, L) <= target_card, never below k - 1.
/// Any normal-form set with |hA| <= target_card has max(A) <= L.
/// std::nullopt when the chain saturates at or below target_card, i.e. no
/// finite span bound follows from it. For k = 2 the only normal form is {0, 1}.
std::optional<Int> span_cutoff(Int h, Int k, Int target_card);

/// For A = [0, x-1] u [x+r, y]: true iff h(t-1) >= r + t - 1, which is
/// enough for hA = [0, hy]. Requires 2 <= t <= x, r >= 0, x + r <= y - t + 1, h >= 1.
bool interval_closure_holds(Int x, Int t, Int r, Int y, Int h);

/// The two-element-block special case: requires x >= 2, r >= 0, x + r <= y - 1
/// and |A| = y - r + 1 >= 4; true iff h >= r + 1.
bool interval_closure_two_block(Int x, Int r, Int y, Int h);

/// v in 2A, by pairwise search over A.
bool in_two_fold(const IntSet& set, Int value);

/// With a = A[t_index], requires min(A) = 0 and 0 < a <= m <= h*a - 1.
/// True iff a + (m mod a) lies in 2A, in which case m lies in hA.
bool residue_membership(const IntSet& set, std::size_t t_index, Int m, Int h);

/// For a normal-form A with k >= 3: when |2A| = 2k - 1 + b < 3k - 3, reports
/// whether max(A) <= k + b - 1 (A sits inside a progression of length k + b).
/// Vacuously true when |2A| >= 3k - 3.
bool freiman_containment_check(const IntSet& set);

/// Every direct bound that applies to A's normal form at this h, with the
/// lev_step entry computed from the exact |(h-1)A|.
std::vector<BoundReport> direct_bounds(const IntSet& set, Int h);

}  // namespace sumsets::bounds
