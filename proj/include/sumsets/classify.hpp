#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumsets/enumerate.hpp"
#include "sumsets/int_set.hpp"

namespace sumsets::classify {

/// What to enumerate: k-element normal sets with max <= max_span, bucketed by
/// |hA| for every value in [lo, hi].
struct EnumSpec {
  Int h = 2;
  Int k = 5;
  Int max_span = 4;
  Int lo = 0;
  Int hi = 0;

  friend bool operator==(const EnumSpec&, const EnumSpec&) = default;
};

/// Spec with max_span = bounds::span_cutoff(h, k, hi). Throws PreconditionError
/// when the band starts below the minimum |hA| or when the chain bound gives
/// no finite span for hi.
EnumSpec make_spec(Int h, Int k, Int lo, Int hi);

enum class Status { pass, fail, skipped };

std::string_view to_string(Status status);
Status status_from_string(std::string_view text);

struct Counterexample {
  IntSet set;
  std::string detail;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Outcome of checking one claim at one parameter point.
struct Verdict {
  std::string claim;
  std::string range;
  Status status = Status::pass;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Options {
  unsigned workers = 1;
  /// Store one representative per reflection pair instead of every normal set.
  bool dedup = true;
};

struct ClassificationReport {
  EnumSpec spec;
  bool dedup = true;
  /// Chain-bound cutoff for spec.hi; the buckets are complete iff it is finite
  /// and spec.max_span reaches it.
  std::optional<Int> span_cutoff;
  bool complete = false;
  std::uint64_t sets_enumerated = 0;
  /// One entry per value in [lo, hi]; each list sorted lexicographically.
  std::map<Int, std::vector<IntSet>> buckets;
  std::vector<Verdict> verdicts;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Exhaustive bucketing of a cardinality band. Appends a self-check verdict
/// that recomputes |hA| for every bucket entry.
ClassificationReport classify_band(const EnumSpec& spec, const Options& options);

/// Result of searching a band for cardinalities no set attains.
struct GapScan {
  Int h = 0;
  Int k = 0;
  Int lo = 0;
  Int hi = 0;
  Int span_cutoff = 0;
  std::uint64_t sets_enumerated = 0;
  std::vector<Int> unattained;
  std::map<Int, std::uint64_t> attained_counts;
};

/// Requires nathanson_lower(h, k) <= lo <= hi <= hk + 3h - 4.
GapScan scan_gaps(Int h, Int k, Int lo, Int hi, unsigned workers);

/// A claimed interval of unattainable |hA| values.
struct GapClaim {
  int item = 0;
  Int lo = 0;
  Int hi = 0;
};

/// The nonempty unattainability intervals that apply at (h, k), for k >= 5:
///   1: h >= 3, [hk - h + 2, hk - 1]
///   2: h >= 4, [hk + 2, hk + h - 2]
///   3: h >= 5, [hk + h + 2, hk + 2h - 3]
///   4: h >= 6, [hk + 2h + 2, hk + 3h - 4]
std::vector<GapClaim> gap_claims(Int h, Int k);

/// (|2A|, |3A|) over every normal set covering both the 3-fold band up to
/// 3k + 4 and the 2-fold band up to 2k + 1, with the implications checked.
struct ImplicationReport {
  Int k = 0;
  Int max_span = 0;
  std::uint64_t sets_enumerated = 0;
  std::map<std::pair<Int, Int>, std::uint64_t> pairs;
  std::vector<Verdict> verdicts;
};

/// Requires k >= 6.
ImplicationReport implication_table(Int k, unsigned workers);

// ---------------------------------------------------------------------------
// Claim verification

/// Cases 4-6 state their range as "h >= a and k >= b or h >= c and k >= d".
/// disjunctive reads (h >= a and k >= b) or (h >= c and k >= d); conjunctive
/// reads h >= a and (k >= b or h >= c) and k >= d.
enum class RangeGrouping { disjunctive, conjunctive };

std::string_view to_string(RangeGrouping grouping);

/// Expected sets for a claim plus transcription notes.
struct FamilyList {
  std::vector<IntSet> sets;
  std::vector<std::string> notes;
};

bool main_case_in_range(int case_id, Int h, Int k, RangeGrouping grouping);
Int main_case_target(int case_id, Int h, Int k);
/// The literal three-hole family list of a case, as subsets of [0, k+2].
FamilyList main_case_family(int case_id, Int k);

/// Checks both directions: the bucket at the case's target equals the family
/// list. Throws PreconditionError outside the case's range.
Verdict verify_main_theorem(Int h, Int k, int case_id, const Options& options,
                            RangeGrouping grouping = RangeGrouping::disjunctive);

bool tang_xing_item_in_range(int item, Int h, Int k);
Int tang_xing_target(int item, Int h, Int k);
FamilyList tang_xing_family(int item, Int k);

/// Same contract as verify_main_theorem for the one- and two-hole items 1-6.
Verdict verify_tang_xing(Int h, Int k, int item, const Options& options);

/// The claim's interval is absent from the scan's attained values.
Verdict verify_gap_claim(Int h, Int k, const GapClaim& claim, unsigned workers);

/// The bucket at hk - h + 1 is exactly {[0, k-1]}.
Verdict verify_nathanson_inverse(Int h, Int k, const Options& options);

/// Closed-form prediction against hfold for every in-hypothesis parameter
/// choice of one family at (h, k). family is one of prop31..prop34, thm15, thm16.
/// With check_structure, explicitly known hA structures must match as well.
Verdict verify_predictions(std::string_view family, Int h, Int k, bool check_structure = true);

/// Span containment: |hA| < hk + 3h - 4 forces max(A) <= k + 2, and so does
/// equality when k >= 6. Also checks the chain inequality used to get there.
Verdict verify_span_lemma(Int h, Int k, unsigned workers);

/// Interval-closure predicate implies hA = [0, hy] for every block set with
/// k elements, plus agreement with the two-element-block special case.
Verdict verify_interval_closure(Int h, Int k);

/// For k >= 3: containment in a short progression below |2A| = 3k - 3, and
/// the 2A direct bound, over every normal set that could violate them.
Verdict verify_freiman(Int k, unsigned workers);

/// All claim ids the dispatcher understands.
const std::vector<std::string>& claim_ids();

/// Runs claim `id` at (h, k). Out-of-range points give Status::skipped
/// entries; unknown ids throw PreconditionError. main4..main6 produce one
/// verdict per grouping in `groupings`.
std::vector<Verdict> verify_point(std::string_view id, Int h, Int k, const Options& options,
                                  const std::vector<RangeGrouping>& groupings = {RangeGrouping::disjunctive});

}  // namespace sumsets::classify
