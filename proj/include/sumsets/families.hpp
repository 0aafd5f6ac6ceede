#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumsets/int_set.hpp"
#include "sumsets/run_set.hpp"

namespace sumsets::families {

/// [0, span_top] with 1 to 3 holes removed. Holes lie in [1, span_top].
struct FamilyPattern {
  Int span_top = 0;
  std::vector<Int> holes;

  /// Number of elements left, n + 1 - |holes|.
  Int size() const { return span_top + 1 - static_cast<Int>(holes.size()); }
  std::string to_string() const;
};

/// Throws PreconditionError for holes outside [1, span_top], unsorted or repeated holes.
IntSet family_set(const FamilyPattern& pattern);

/// Shorthand for family_set({n, holes}).
IntSet interval_minus(Int n, std::vector<Int> holes);

/// A closed-form |hA| and, where it is known explicitly, hA itself.
struct Prediction {
  Int cardinality = 0;
  std::optional<RunSet> structure;
  std::string source;
};

/// {0} u [x, y] (variant a) or its mirror [0, y - x] u {y} (variant b).
enum class SingletonGapVariant { a, b };

IntSet prop31_set(Int x, Int y, SingletonGapVariant variant);

/// hA for the singleton-plus-interval sets. Needs h >= 1, x >= 1 and
/// y >= 2x - 1 (HypothesisError otherwise).
Prediction prop31_predict(Int h, Int x, Int y, SingletonGapVariant variant);

/// [0, k+2] minus {x, x+1, x+2}, 1 <= x <= k - 1.
Prediction prop32_predict(Int h, Int k, Int x);

/// [0, k+2] minus {x, x+1, z} with 1 <= x <= z - 3 <= k - 2.
Prediction prop33_predict(Int h, Int k, Int x, Int z);

/// [0, k+2] minus pairwise non-adjacent {x, y, z} with 1 <= x <= y - 2 <= z - 4 <= k - 3.
Prediction prop34_predict(Int h, Int k, Int x, Int y, Int z);

/// One hole: [0, k] minus {x}, 1 <= x <= k - 1.
/// Two holes: [0, k+1] minus {x, y}, 1 <= x < y <= k.
Prediction tang_xing_predict(Int h, Int k, std::span<const Int> holes);

/// The set a tang_xing_predict query describes.
IntSet tang_xing_set(Int k, std::span<const Int> holes);

/// Mirror image of a RunSet about `top`: {top - v}.
RunSet mirror(const RunSet& set, Int top);

}  // namespace sumsets::families
