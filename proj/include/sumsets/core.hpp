#pragma once

#include "sumsets/int_set.hpp"
#include "sumsets/run_set.hpp"

namespace sumsets {

/// Witness of original = dilation * normalized + offset.
struct NormalForm {
  Int offset = 0;
  Int dilation = 1;
  IntSet normalized;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Translate the minimum to 0 and divide by the gcd of the differences.
/// Throws DegenerateSetError when |A| < 2.
NormalForm normalize(const IntSet& set);

/// min(A) == 0 and gcd of the elements is 1.
bool is_normal_form(const IntSet& set);

/// {max(A) - a : a in A}.
IntSet reflect(const IntSet& set);

/// Lexicographically smaller of the normal forms of A and of its reflection.
IntSet canonical(const IntSet& set);

/// Exact {s + t}. Dense shifted-OR kernel when the result span is moderate,
/// pairwise run sums otherwise. Throws PreconditionError on empty operands and
/// OverflowError when an endpoint leaves the 64-bit range.
RunSet minkowski_add(const RunSet& lhs, const RunSet& rhs);
RunSet minkowski_add(const IntSet& lhs, const IntSet& rhs);

/// Pairwise run sums merged back into maximal runs. Exact for any span;
/// exposed so the dense kernel can be cross-checked.
RunSet minkowski_add_runs(const RunSet& lhs, const RunSet& rhs);

/// h-fold sumset hA via a doubling addition chain on the normal form.
/// Requires A nonempty and h >= 1.
RunSet hfold(const IntSet& set, Int h);

/// h-fold sumset as h - 1 sequential additions of A, no normalization.
RunSet hfold_sequential(const IntSet& set, Int h);

/// |hA|, shorthand for hfold(set, h).cardinality().
Int hfold_cardinality(const IntSet& set, Int h);

}  // namespace sumsets
