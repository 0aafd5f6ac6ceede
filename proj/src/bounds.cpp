#include "sumsets/bounds.hpp"

#include <algorithm>

#include "checked.hpp"
#include "sumsets/core.hpp"
#include "sumsets/error.hpp"

namespace sumsets::bounds {

using detail::checked_add;
using detail::checked_mul;

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::nathanson: return "nathanson";
    case BoundKind::freiman_2a: return "freiman_2a";
    case BoundKind::lev_step: return "lev_step";
    case BoundKind::lev_chain: return "lev_chain";
  }
  return "unknown";
}

Int nathanson_lower(Int h, Int k) {
  if (h < 1 || k < 1) throw PreconditionError("nathanson_lower needs h >= 1 and k >= 1");
  return checked_add(checked_mul(h, k) - h, 1);
}

Int freiman_2a_lower(Int k, Int a_last) {
  if (k < 3) throw PreconditionError("freiman_2a_lower needs k >= 3");
  if (a_last < k - 1) throw PreconditionError("impossible span for k distinct elements");
  if (a_last <= 2 * k - 3) return checked_add(k, a_last);
  return 3 * k - 3;
}

Int lev_step_lower(Int h, Int k, Int a_last, Int prev_card) {
  if (h < 2 || k < 2 || a_last < 1) throw PreconditionError("lev_step_lower needs h, k >= 2 and a_last >= 1");
  if (prev_card < k) throw PreconditionError("|(h-1)A| cannot be smaller than |A|");
  return checked_add(prev_card, std::min(a_last, checked_add(checked_mul(h, k - 2), 1)));
}

Int lev_chain_lower(Int h, Int k, Int a_last) {
  if (h < 2 || k < 2 || a_last < 1) throw PreconditionError("lev_chain_lower needs h, k >= 2 and a_last >= 1");
  Int total = k;
  for (Int i = 2; i <= h; ++i) {
    total = checked_add(total, std::min(a_last, checked_add(checked_mul(i, k - 2), 1)));
  }
  return total;
}

std::optional<Int> span_cutoff(Int h, Int k, Int target_card) {
  if (h < 2 || k < 2) throw PreconditionError("span_cutoff needs h, k >= 2");
  if (k == 2) return 1;
  // Beyond h(k-2)+1 every min() term is saturated.
  const Int saturation = checked_add(checked_mul(h, k - 2), 1);
  if (lev_chain_lower(h, k, saturation) <= target_card) return std::nullopt;
  Int span = k - 1;
  while (span + 1 < saturation && lev_chain_lower(h, k, span + 1) <= target_card) ++span;
  return span;
}

bool interval_closure_holds(Int x, Int t, Int r, Int y, Int h) {
  if (t < 2 || t > x || r < 0 || x + r > y - t + 1 || h < 1) {
    throw PreconditionError("interval closure needs 2 <= t <= x, r >= 0, x + r <= y - t + 1, h >= 1");
  }
  return checked_mul(h, t - 1) >= r + t - 1;
}

bool interval_closure_two_block(Int x, Int r, Int y, Int h) {
  if (x < 2 || r < 0 || x + r > y - 1 || y - r + 1 < 4 || h < 1) {
    throw PreconditionError("two-block closure needs x >= 2, r >= 0, x + r <= y - 1, |A| >= 4, h >= 1");
  }
  return h >= r + 1;
}

bool in_two_fold(const IntSet& set, Int value) {
  for (Int a : set) {
    Int rest;
    if (__builtin_sub_overflow(value, a, &rest)) continue;
    if (rest < a) break;
    if (set.contains(rest)) return true;
  }
  return false;
}

bool residue_membership(const IntSet& set, std::size_t t_index, Int m, Int h) {
  if (set.empty() || set.min() != 0) throw PreconditionError("residue_membership needs min(A) = 0");
  if (t_index >= set.size()) throw PreconditionError("t_index out of range");
  const Int a = set[t_index];
  if (a <= 0 || m < a || m > checked_mul(h, a) - 1) {
    throw PreconditionError("residue_membership needs 0 < a_t <= m <= h*a_t - 1");
  }
  return in_two_fold(set, a + m % a);
}

bool freiman_containment_check(const IntSet& set) {
  const Int k = static_cast<Int>(set.size());
  if (k < 3) throw PreconditionError("freiman_containment_check needs k >= 3");
  if (!is_normal_form(set)) throw PreconditionError("freiman_containment_check needs a normal-form set");
  const Int doubled = hfold_cardinality(set, 2);
  if (doubled >= 3 * k - 3) return true;
  const Int b = doubled - (2 * k - 1);
  return set.max() <= k + b - 1;
}

std::vector<BoundReport> direct_bounds(const IntSet& set, Int h) {
  std::vector<BoundReport> out;
  const Int k = static_cast<Int>(set.size());
  out.push_back({BoundKind::nathanson, nathanson_lower(h, k), h, k, 0});
  if (k < 2) return out;
  const NormalForm nf = normalize(set);
  const Int a_last = nf.normalized.max();
  if (h == 2 && k >= 3) out.push_back({BoundKind::freiman_2a, freiman_2a_lower(k, a_last), h, k, a_last});
  if (h >= 2) {
    const Int prev = hfold_cardinality(nf.normalized, h - 1);
    out.push_back({BoundKind::lev_step, lev_step_lower(h, k, a_last, prev), h, k, a_last});
    out.push_back({BoundKind::lev_chain, lev_chain_lower(h, k, a_last), h, k, a_last});
  }
  return out;
}

}  // namespace sumsets::bounds
