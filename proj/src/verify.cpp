#include <algorithm>
#include <set>
#include <sstream>

#include "sumsets/bounds.hpp"
#include "sumsets/classify.hpp"
#include "sumsets/core.hpp"
#include "sumsets/error.hpp"
#include "sumsets/families.hpp"

namespace sumsets::classify {

namespace {

std::string point(Int h, Int k) {
  std::ostringstream out;
  out << "h=" << h << ",k=" << k;
  return out.str();
}

/// Collects sets in statement order, dropping repeats with a note.
class FamilyBuilder {
 public:
  FamilyBuilder(Int span_top) : span_top_(span_top) {}

  void add(std::vector<Int> holes, const std::string& label) {
    std::sort(holes.begin(), holes.end());
    IntSet set = families::interval_minus(span_top_, holes);
    if (!seen_.insert(set).second) {
      list_.notes.push_back("family " + label + " is listed more than once; kept once");
      return;
    }
    list_.sets.push_back(std::move(set));
  }

  /// Notes a parameterized entry whose range is empty at this k.
  template <class F>
  void add_range(Int lo, Int hi, const std::string& label, F&& each) {
    if (lo > hi) {
      list_.notes.push_back("family " + label + " has an empty parameter range; dropped");
      return;
    }
    for (Int i = lo; i <= hi; ++i) each(i);
  }

  FamilyList finish() {
    std::sort(list_.sets.begin(), list_.sets.end());
    return std::move(list_);
  }

 private:
  Int span_top_;
  std::set<IntSet> seen_;
  FamilyList list_;
};

void add_common_twelve(FamilyBuilder& b, Int k) {
  b.add({1, 2, 3}, "{1,2,3}");
  b.add({k - 1, k, k + 1}, "{k-1,k,k+1}");
  b.add({1, 2, 4}, "{1,2,4}");
  b.add({k - 2, k, k + 1}, "{k-2,k,k+1}");
  b.add({1, 2, k + 1}, "{1,2,k+1}");
  b.add({1, k, k + 1}, "{1,k,k+1}");
  b.add({1, 2, 5}, "{1,2,5}");
  b.add({k - 3, k, k + 1}, "{k-3,k,k+1}");
  b.add({1, 3, 5}, "{1,3,5}");
  b.add({k - 3, k - 1, k + 1}, "{k-3,k-1,k+1}");
  b.add({1, 3, k + 1}, "{1,3,k+1}");
  b.add({1, k - 1, k + 1}, "{1,k-1,k+1}");
}

bool grouped(Int h, Int k, Int a, Int b, Int c, Int d, RangeGrouping grouping) {
  if (grouping == RangeGrouping::disjunctive) return (h >= a && k >= b) || (h >= c && k >= d);
  return h >= a && (k >= b || h >= c) && k >= d;
}

/// Unexpected members and missing listed sets, both directions of an iff.
std::vector<Counterexample> compare_bucket(const std::vector<IntSet>& observed, const std::vector<IntSet>& expected,
                                           Int h, Int target) {
  std::vector<Counterexample> out;
  for (const IntSet& set : observed) {
    if (!std::binary_search(expected.begin(), expected.end(), set)) {
      out.push_back({set, "|hA| = " + std::to_string(target) + " but the set is not in the stated list"});
    }
  }
  for (const IntSet& set : expected) {
    if (!std::binary_search(observed.begin(), observed.end(), set)) {
      const Int actual = hfold_cardinality(set, h);
      out.push_back({set, "listed, but |hA| = " + std::to_string(actual) + " instead of " + std::to_string(target)});
    }
  }
  return out;
}

Verdict bucket_verdict(std::string claim, Int h, Int k, Int target, const FamilyList& family, const Options& options) {
  Options exact = options;
  exact.dedup = false;
  const ClassificationReport report = classify_band(make_spec(h, k, target, target), exact);
  Verdict v{std::move(claim), point(h, k), Status::pass, {}, family.notes};
  v.counterexamples = compare_bucket(report.buckets.at(target), family.sets, h, target);
  for (const Verdict& inner : report.verdicts) {
    if (inner.status == Status::fail) {
      v.counterexamples.insert(v.counterexamples.end(), inner.counterexamples.begin(), inner.counterexamples.end());
    }
  }
  v.notes.push_back("target |hA| = " + std::to_string(target) + ", exhaustive up to span " +
                    std::to_string(report.spec.max_span));
  if (!report.complete) v.notes.push_back("enumeration not certified complete");
  if (!v.counterexamples.empty() || !report.complete) v.status = Status::fail;
  return v;
}

Verdict skipped(std::string claim, Int h, Int k, std::string why) {
  return {std::move(claim), point(h, k), Status::skipped, {}, {"skipped (hypothesis): " + std::move(why)}};
}

}  // namespace

std::string_view to_string(RangeGrouping grouping) {
  return grouping == RangeGrouping::disjunctive ? "disjunctive" : "conjunctive";
}

bool main_case_in_range(int case_id, Int h, Int k, RangeGrouping grouping) {
  if (h < 2 || k < 5) return false;
  switch (case_id) {
    case 1: return h == 2 && k >= 6;
    case 2: return h == 3;
    case 3: return h >= 4;
    case 4: return grouped(h, k, 4, 5, 3, 6, grouping);
    case 5: return grouped(h, k, 4, 6, 5, 5, grouping);
    case 6: return grouped(h, k, 5, 6, 6, 5, grouping);
  }
  throw PreconditionError("main theorem case must be 1..6");
}

Int main_case_target(int case_id, Int h, Int k) {
  switch (case_id) {
    case 1: return 2 * k + 2;
    case 2: return 3 * k + 4;
    case 3: return h * k + 2 * h - 2;
    case 4: return h * k + 2 * h - 1;
    case 5: return h * k + 2 * h;
    case 6: return h * k + 2 * h + 1;
  }
  throw PreconditionError("main theorem case must be 1..6");
}

FamilyList main_case_family(int case_id, Int k) {
  if (k < 5) throw PreconditionError("main theorem families need k >= 5");
  FamilyBuilder b(k + 2);
  switch (case_id) {
    case 1:
      b.add({2, 3, k + 2}, "{2,3,k+2}");
      b.add({k - 2, k - 1, k + 2}, "{k-2,k-1,k+2}");
      b.add_range(4, k - 1, "{1,i,k+2}", [&](Int i) { b.add({1, i, k + 2}, "{1,i,k+2}"); });
      b.add_range(2, k - 3, "{i,k,k+2}", [&](Int i) { b.add({i, k, k + 2}, "{i,k,k+2}"); });
      add_common_twelve(b, k);
      b.add({2, 3, k + 2}, "{2,3,k+2}");
      break;
    case 2:
      add_common_twelve(b, k);
      for (Int i = 2; i <= k - 1; ++i) {
        for (Int j = i + 1; j <= k - 1; ++j) b.add({i, j, k + 2}, "{i,j,k+2}");
      }
      break;
    case 3:
      add_common_twelve(b, k);
      break;
    case 4:
      b.add({1, 3, 4}, "{1,3,4}");
      b.add({k - 2, k - 1, k + 1}, "{k-2,k-1,k+1}");
      b.add_range(6, k, "{1,2,i}", [&](Int i) { b.add({1, 2, i}, "{1,2,i}"); });
      b.add_range(2, k - 4, "{i,k,k+1}", [&](Int i) { b.add({i, k, k + 1}, "{i,k,k+1}"); });
      b.add_range(6, k, "{1,3,i}", [&](Int i) { b.add({1, 3, i}, "{1,3,i}"); });
      b.add_range(2, k - 4, "{i,k-1,k+1}", [&](Int i) { b.add({i, k - 1, k + 1}, "{i,k-1,k+1}"); });
      b.add_range(4, k - 2, "{1,i,k+1}", [&](Int i) { b.add({1, i, k + 1}, "{1,i,k+1}"); });
      break;
    case 5:
      b.add({2, 3, k + 1}, "{2,3,k+1}");
      b.add({1, k - 1, k}, "{1,k-1,k}");
      b.add_range(3, k - 4, "{i,i+1,k+1}", [&](Int i) { b.add({i, i + 1, k + 1}, "{i,i+1,k+1}"); });
      b.add_range(5, k - 2, "{1,i,i+1}", [&](Int i) { b.add({1, i, i + 1}, "{1,i,i+1}"); });
      b.add_range(2, k - 4, "{i,i+2,k+1}", [&](Int i) { b.add({i, i + 2, k + 1}, "{i,i+2,k+1}"); });
      b.add_range(4, k - 2, "{1,i,i+2}", [&](Int i) { b.add({1, i, i + 2}, "{1,i,i+2}"); });
      // {1,i,j}: 4 <= i <= j - 3 <= k - 3
      b.add_range(4, k - 3, "{1,i,j}", [&](Int i) {
        for (Int j = i + 3; j <= k; ++j) b.add({1, i, j}, "{1,i,j}");
      });
      // {i,j,k+1}: 2 <= i <= j - 3 <= k - 5
      b.add_range(2, k - 5, "{i,j,k+1}", [&](Int i) {
        for (Int j = i + 3; j <= k - 2; ++j) b.add({i, j, k + 1}, "{i,j,k+1}");
      });
      break;
    case 6:
      for (Int x = 2; x <= k; ++x) {
        for (Int y = x + 1; y <= k; ++y) {
          for (Int z = y + 1; z <= k; ++z) b.add({x, y, z}, "{x,y,z}");
        }
      }
      break;
    default:
      throw PreconditionError("main theorem case must be 1..6");
  }
  return b.finish();
}

Verdict verify_main_theorem(Int h, Int k, int case_id, const Options& options, RangeGrouping grouping) {
  if (!main_case_in_range(case_id, h, k, grouping)) {
    throw PreconditionError("(h, k) outside the range of main theorem case " + std::to_string(case_id));
  }
  Verdict v = bucket_verdict("main" + std::to_string(case_id), h, k, main_case_target(case_id, h, k),
                             main_case_family(case_id, k), options);
  if (case_id >= 4) v.notes.push_back(std::string("range grouping: ") + std::string(to_string(grouping)));
  return v;
}

bool tang_xing_item_in_range(int item, Int h, Int k) {
  if (h < 2 || k < 5) return false;
  switch (item) {
    case 1: return true;
    case 2: return h >= 3;
    case 3: return h == 2;
    case 4: return h >= 3;
    case 5: return h >= 3;
    case 6: return h >= 4;
  }
  throw PreconditionError("item must be 1..6");
}

Int tang_xing_target(int item, Int h, Int k) {
  switch (item) {
    case 1: return h * k;
    case 2: return h * k + 1;
    case 3: return 2 * k + 1;
    case 4: return h * k + h - 1;
    case 5: return h * k + h;
    case 6: return h * k + h + 1;
  }
  throw PreconditionError("item must be 1..6");
}

FamilyList tang_xing_family(int item, Int k) {
  if (k < 5) throw PreconditionError("one- and two-hole families need k >= 5");
  if (item == 1 || item == 2) {
    FamilyBuilder b(k);
    if (item == 1) {
      b.add({1}, "{1}");
      b.add({k - 1}, "{k-1}");
    } else {
      b.add_range(2, k - 2, "{x}", [&](Int x) { b.add({x}, "{x}"); });
    }
    return b.finish();
  }
  FamilyBuilder b(k + 1);
  auto five = [&] {
    b.add({1, 2}, "{1,2}");
    b.add({k - 1, k}, "{k-1,k}");
    b.add({1, k}, "{1,k}");
    b.add({1, 3}, "{1,3}");
    b.add({k - 2, k}, "{k-2,k}");
  };
  switch (item) {
    case 3:
      five();
      b.add_range(2, k - 2, "{i,k+1}", [&](Int i) { b.add({i, k + 1}, "{i,k+1}"); });
      break;
    case 4:
      five();
      break;
    case 5:
      b.add_range(2, k - 3, "{i,k}", [&](Int i) { b.add({i, k}, "{i,k}"); });
      b.add_range(4, k - 1, "{1,j}", [&](Int j) { b.add({1, j}, "{1,j}"); });
      break;
    case 6:
      for (Int x = 2; x <= k - 1; ++x) {
        for (Int y = x + 1; y <= k - 1; ++y) b.add({x, y}, "{x,y}");
      }
      break;
    default:
      throw PreconditionError("item must be 1..6");
  }
  return b.finish();
}

Verdict verify_tang_xing(Int h, Int k, int item, const Options& options) {
  if (!tang_xing_item_in_range(item, h, k)) {
    throw PreconditionError("(h, k) outside the range of item " + std::to_string(item));
  }
  return bucket_verdict("tang-xing item " + std::to_string(item), h, k, tang_xing_target(item, h, k),
                        tang_xing_family(item, k), options);
}

Verdict verify_gap_claim(Int h, Int k, const GapClaim& claim, unsigned workers) {
  const GapScan scan = scan_gaps(h, k, claim.lo, claim.hi, workers);
  Verdict v{"gap item " + std::to_string(claim.item), point(h, k), Status::pass, {}, {}};
  v.notes.push_back("band [" + std::to_string(claim.lo) + ", " + std::to_string(claim.hi) +
                    "], exhaustive up to span " + std::to_string(scan.span_cutoff));
  if (scan.attained_counts.empty()) return v;

  v.status = Status::fail;
  const ClassificationReport witnesses =
      classify_band({h, k, scan.span_cutoff, claim.lo, claim.hi}, Options{workers, true});
  for (const auto& [card, sets] : witnesses.buckets) {
    for (const IntSet& set : sets) v.counterexamples.push_back({set, "|hA| = " + std::to_string(card)});
  }
  return v;
}

Verdict verify_nathanson_inverse(Int h, Int k, const Options& options) {
  if (h < 2 || k < 2) throw PreconditionError("the inverse statement needs h >= 2 and k >= 2");
  std::vector<Int> progression(static_cast<std::size_t>(k));
  for (Int i = 0; i < k; ++i) progression[static_cast<std::size_t>(i)] = i;
  FamilyList family{{IntSet(std::move(progression))}, {}};
  return bucket_verdict("nathanson inverse", h, k, bounds::nathanson_lower(h, k), family, options);
}

namespace {

void check_prediction(Verdict& v, const IntSet& set, Int h, const families::Prediction& p, bool check_structure) {
  const RunSet actual = hfold(set, h);
  if (p.cardinality != actual.cardinality()) {
    std::ostringstream d;
    d << p.source << ": predicted |hA| = " << p.cardinality << ", computed " << actual.cardinality();
    v.counterexamples.push_back({set, d.str()});
  } else if (check_structure && p.structure && *p.structure != actual) {
    std::ostringstream d;
    d << p.source << ": predicted hA = " << p.structure->to_string() << ", computed " << actual.to_string();
    v.counterexamples.push_back({set, d.str()});
  }
}

}  // namespace

Verdict verify_predictions(std::string_view family, Int h, Int k, bool check_structure) {
  using namespace families;
  Verdict v{std::string(family), point(h, k), Status::pass, {}, {}};
  std::size_t checked = 0;
  auto run = [&](const IntSet& set, const Prediction& p) {
    ++checked;
    check_prediction(v, set, h, p, check_structure);
  };

  if (family == "prop31") {
    if (h < 1 || k < 2) throw PreconditionError("prop31 needs h >= 1 and k >= 2");
    for (Int x = 1; x <= k - 1; ++x) {
      const Int y = k + x - 2;
      for (auto variant : {SingletonGapVariant::a, SingletonGapVariant::b}) {
        run(prop31_set(x, y, variant), prop31_predict(h, x, y, variant));
      }
    }
  } else if (family == "prop32" || family == "prop33" || family == "prop34" || family == "thm15" ||
             family == "thm16") {
    if (h < 2 || k < 5) throw PreconditionError(std::string(family) + " needs h >= 2 and k >= 5");
    if (family == "prop32") {
      for (Int x = 1; x <= k - 1; ++x) run(interval_minus(k + 2, {x, x + 1, x + 2}), prop32_predict(h, k, x));
    } else if (family == "prop33") {
      for (Int x = 1; x <= k - 2; ++x) {
        for (Int z = x + 3; z <= k + 1; ++z) run(interval_minus(k + 2, {x, x + 1, z}), prop33_predict(h, k, x, z));
      }
    } else if (family == "prop34") {
      for (Int x = 1; x <= k - 3; ++x) {
        for (Int y = x + 2; y <= k - 1; ++y) {
          for (Int z = y + 2; z <= k + 1; ++z) {
            run(interval_minus(k + 2, {x, y, z}), prop34_predict(h, k, x, y, z));
          }
        }
      }
    } else if (family == "thm15") {
      for (Int x = 1; x <= k - 1; ++x) {
        const std::vector<Int> holes{x};
        run(tang_xing_set(k, holes), tang_xing_predict(h, k, holes));
      }
    } else {
      for (Int x = 1; x <= k; ++x) {
        for (Int y = x + 1; y <= k; ++y) {
          const std::vector<Int> holes{x, y};
          run(tang_xing_set(k, holes), tang_xing_predict(h, k, holes));
        }
      }
    }
  } else {
    throw PreconditionError("unknown prediction family: " + std::string(family));
  }
  v.notes.push_back(std::to_string(checked) + " parameter choices checked");
  if (!v.counterexamples.empty()) v.status = Status::fail;
  return v;
}

Verdict verify_span_lemma(Int h, Int k, unsigned workers) {
  if (h < 2 || k < 5) throw PreconditionError("span lemma needs h >= 2 and k >= 5");
  const Int target = h * k + 3 * h - 4;
  Verdict v{"lemma21", point(h, k), Status::pass, {}, {}};

  // Sets with a_{k-1} >= 2k - 2 have |hA| >= k + (h-2)(2k-2) + 2k - 3.
  const Int far = k + (h - 2) * (2 * k - 2) + 2 * k - 3;
  if (bounds::lev_chain_lower(h, k, 2 * k - 2) < far) {
    v.counterexamples.push_back({IntSet{}, "chain bound at span 2k-2 is below k + (h-2)(2k-2) + 2k-3"});
  }
  if (far < target) {
    v.counterexamples.push_back({IntSet{}, "k + (h-2)(2k-2) + 2k-3 < hk + 3h - 4"});
  }
  if (k >= 6 && far <= target) {
    v.counterexamples.push_back({IntSet{}, "k + (h-2)(2k-2) + 2k-3 is not strictly above hk + 3h - 4"});
  }

  Int span = *bounds::span_cutoff(h, k, target - 1);
  if (k >= 6) span = std::max(span, *bounds::span_cutoff(h, k, target));
  struct Partial {
    std::vector<Counterexample> bad;
  };
  auto parts = scan_partitions<Partial>(k, span, workers, [&](Partial& part, std::span<const Int> elements) {
    if (elements.back() <= k + 2) return;
    IntSet set(std::vector<Int>(elements.begin(), elements.end()));
    const Int card = hfold_cardinality(set, h);
    if (card < target || (k >= 6 && card == target)) {
      part.bad.push_back({set, "|hA| = " + std::to_string(card) + " with max(A) > k + 2"});
    }
  });
  for (auto& part : parts) v.counterexamples.insert(v.counterexamples.end(), part.bad.begin(), part.bad.end());
  v.notes.push_back("exhaustive up to span " + std::to_string(span));
  if (k == 5) v.notes.push_back("equality case |hA| = hk + 3h - 4 not claimed at k = 5");
  if (!v.counterexamples.empty()) v.status = Status::fail;
  return v;
}

Verdict verify_interval_closure(Int h, Int k) {
  if (h < 1 || k < 4) throw PreconditionError("interval closure check needs h >= 1 and k >= 4");
  Verdict v{"lemma23", point(h, k), Status::pass, {}, {}};
  std::size_t implied = 0, total = 0;
  for (Int x = 2; x <= k - 2; ++x) {
    for (Int r = 0; r <= h * k; ++r) {
      const Int y = k + r - 1;
      std::vector<Int> elements;
      for (Int a = 0; a <= x - 1; ++a) elements.push_back(a);
      for (Int a = x + r; a <= y; ++a) elements.push_back(a);
      const IntSet set(std::move(elements));
      std::optional<RunSet> sum;
      for (Int t = 2; t <= std::min(x, k - x); ++t) {
        ++total;
        if (!bounds::interval_closure_holds(x, t, r, y, h)) continue;
        ++implied;
        if (!sum) sum = hfold(set, h);
        if (*sum != RunSet({{0, h * y}})) {
          v.counterexamples.push_back({set, "closure predicate holds at t = " + std::to_string(t) +
                                                ", but hA = " + sum->to_string()});
        }
      }
      if (bounds::interval_closure_holds(x, 2, r, y, h) != bounds::interval_closure_two_block(x, r, y, h)) {
        v.counterexamples.push_back({set, "t = 2 closure predicate disagrees with the two-block case"});
      }
    }
  }
  v.notes.push_back(std::to_string(total) + " parameter tuples, " + std::to_string(implied) + " with closure implied");
  if (!v.counterexamples.empty()) v.status = Status::fail;
  return v;
}

Verdict verify_freiman(Int k, unsigned workers) {
  if (k < 3) throw PreconditionError("needs k >= 3");
  Verdict v{"freiman13", "k=" + std::to_string(k), Status::pass, {}, {}};
  const Int containment_span = *bounds::span_cutoff(2, k, 3 * k - 4);
  const Int span = std::max(containment_span, 2 * k);
  struct Partial {
    std::vector<Counterexample> bad;
  };
  auto parts = scan_partitions<Partial>(k, span, workers, [&](Partial& part, std::span<const Int> elements) {
    IntSet set(std::vector<Int>(elements.begin(), elements.end()));
    if (!bounds::freiman_containment_check(set)) {
      part.bad.push_back({set, "|2A| < 3k - 3 but A is not inside a progression of length k + b"});
    }
    const Int doubled = hfold_cardinality(set, 2);
    const Int bound = bounds::freiman_2a_lower(k, set.max());
    if (doubled < bound) {
      part.bad.push_back({set, "|2A| = " + std::to_string(doubled) + " below the direct bound " + std::to_string(bound)});
    }
  });
  for (auto& part : parts) v.counterexamples.insert(v.counterexamples.end(), part.bad.begin(), part.bad.end());
  v.notes.push_back("containment exhaustive up to span " + std::to_string(containment_span) +
                    "; direct bound checked up to span " + std::to_string(span));
  if (!v.counterexamples.empty()) v.status = Status::fail;
  return v;
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {
      "thm15", "thm16", "main1", "main2", "main3", "main4", "main5", "main6", "prop31", "prop32",
      "prop33", "prop34", "lemma21", "lemma23", "freiman13", "gaps", "nathanson"};
  return ids;
}

std::vector<Verdict> verify_point(std::string_view id, Int h, Int k, const Options& options,
                                  const std::vector<RangeGrouping>& groupings) {
  std::vector<Verdict> out;
  const std::string name(id);
  auto guarded = [&](const std::string& claim, auto&& body) {
    try {
      out.push_back(body());
    } catch (const PreconditionError& e) {
      out.push_back(skipped(claim, h, k, e.what()));
    }
  };

  if (name == "thm15" || name == "thm16") {
    guarded(name, [&] { return verify_predictions(name, h, k); });
    const int first = name == "thm15" ? 1 : 3;
    for (int item = first; item < first + (name == "thm15" ? 2 : 4); ++item) {
      const std::string claim = "tang-xing item " + std::to_string(item);
      if (!tang_xing_item_in_range(item, h, k)) {
        out.push_back(skipped(claim, h, k, "outside the item's (h, k) range"));
        continue;
      }
      guarded(claim, [&] { return verify_tang_xing(h, k, item, options); });
    }
  } else if (name.size() == 5 && name.starts_with("main") && name[4] >= '1' && name[4] <= '6') {
    const int case_id = name[4] - '0';
    const std::vector<RangeGrouping> used =
        case_id >= 4 ? groupings : std::vector<RangeGrouping>{RangeGrouping::disjunctive};
    for (RangeGrouping grouping : used) {
      if (!main_case_in_range(case_id, h, k, grouping)) {
        Verdict s = skipped(name, h, k, "outside the case's (h, k) range");
        if (case_id >= 4) s.notes.push_back(std::string("range grouping: ") + std::string(to_string(grouping)));
        out.push_back(std::move(s));
        continue;
      }
      guarded(name, [&] { return verify_main_theorem(h, k, case_id, options, grouping); });
    }
  } else if (name.starts_with("prop3") && name.size() == 6 && name[5] >= '1' && name[5] <= '4') {
    guarded(name, [&] { return verify_predictions(name, h, k); });
  } else if (name == "lemma21") {
    guarded(name, [&] { return verify_span_lemma(h, k, options.workers); });
  } else if (name == "lemma23") {
    guarded(name, [&] { return verify_interval_closure(h, k); });
  } else if (name == "freiman13") {
    guarded(name, [&] { return verify_freiman(k, options.workers); });
  } else if (name == "gaps") {
    const auto claims = gap_claims(h, k);
    if (claims.empty()) out.push_back(skipped(name, h, k, "no unattainability claim applies"));
    for (const GapClaim& claim : claims) {
      guarded("gap item " + std::to_string(claim.item), [&] { return verify_gap_claim(h, k, claim, options.workers); });
    }
  } else if (name == "nathanson") {
    guarded(name, [&] { return verify_nathanson_inverse(h, k, options); });
  } else {
    throw PreconditionError("unknown claim id: " + name);
  }
  return out;
}

}  // namespace sumsets::classify
