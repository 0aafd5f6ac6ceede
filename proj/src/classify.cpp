#include "sumsets/classify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "sumsets/bounds.hpp"
#include "sumsets/core.hpp"
#include "sumsets/error.hpp"

namespace sumsets::classify {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

Status status_from_string(std::string_view text) {
  if (text == "pass") return Status::pass;
  if (text == "fail") return Status::fail;
  if (text == "skipped") return Status::skipped;
  throw PreconditionError("unknown verdict status: " + std::string(text));
}

EnumSpec make_spec(Int h, Int k, Int lo, Int hi) {
  if (h < 2 || k < 2) throw PreconditionError("classification needs h >= 2 and k >= 2");
  if (lo < bounds::nathanson_lower(h, k)) throw PreconditionError("band below the minimum |hA| = hk - h + 1");
  if (hi < lo) throw PreconditionError("empty band: hi < lo");
  const auto cutoff = bounds::span_cutoff(h, k, hi);
  if (!cutoff) {
    std::ostringstream msg;
    msg << "no finite span cutoff for |hA| <= " << hi << " at h=" << h << ", k=" << k
        << "; pass an explicit max span";
    throw PreconditionError(msg.str());
  }
  return {h, k, *cutoff, lo, hi};
}

namespace {

struct BandPartial {
  std::uint64_t count = 0;
  std::map<Int, std::vector<IntSet>> buckets;
};

std::string point(Int h, Int k) {
  std::ostringstream out;
  out << "h=" << h << ",k=" << k;
  return out.str();
}

}  // namespace

ClassificationReport classify_band(const EnumSpec& spec, const Options& options) {
  if (spec.h < 2 || spec.k < 2) throw PreconditionError("classification needs h >= 2 and k >= 2");
  if (spec.lo < bounds::nathanson_lower(spec.h, spec.k)) {
    throw PreconditionError("band below the minimum |hA| = hk - h + 1");
  }
  if (spec.hi < spec.lo) throw PreconditionError("empty band: hi < lo");
  if (spec.max_span < spec.k - 1) throw PreconditionError("max_span must be at least k - 1");

  const bool dedup = options.dedup;
  auto parts = scan_partitions<BandPartial>(
      spec.k, spec.max_span, options.workers, [&](BandPartial& part, std::span<const Int> elements) {
        ++part.count;
        IntSet set(std::vector<Int>(elements.begin(), elements.end()));
        const Int card = hfold_cardinality(set, spec.h);
        if (card < spec.lo || card > spec.hi) return;
        part.buckets[card].push_back(dedup ? canonical(set) : std::move(set));
      });

  ClassificationReport report;
  report.spec = spec;
  report.dedup = dedup;
  report.span_cutoff = bounds::span_cutoff(spec.h, spec.k, spec.hi);
  report.complete = report.span_cutoff && spec.max_span >= *report.span_cutoff;
  for (Int c = spec.lo; c <= spec.hi; ++c) report.buckets[c];
  for (auto& part : parts) {
    report.sets_enumerated += part.count;
    for (auto& [card, sets] : part.buckets) {
      auto& bucket = report.buckets[card];
      bucket.insert(bucket.end(), std::make_move_iterator(sets.begin()), std::make_move_iterator(sets.end()));
    }
  }
  for (auto& [card, sets] : report.buckets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  }

  // Recompute every entry along the sequential-sum path.
  Verdict self_check{"bucket-self-check", point(spec.h, spec.k), Status::pass, {}, {}};
  for (const auto& [card, sets] : report.buckets) {
    for (const IntSet& set : sets) {
      const Int actual = hfold_sequential(set, spec.h).cardinality();
      if (actual != card || !is_normal_form(set) || static_cast<Int>(set.size()) != spec.k) {
        std::ostringstream detail;
        detail << "bucket " << card << " holds a set with |hA| = " << actual;
        self_check.counterexamples.push_back({set, detail.str()});
      }
    }
  }
  if (!self_check.counterexamples.empty()) self_check.status = Status::fail;
  if (!report.complete) self_check.notes.push_back("max_span is below the chain-bound cutoff; buckets may be incomplete");
  report.verdicts.push_back(std::move(self_check));
  return report;
}

GapScan scan_gaps(Int h, Int k, Int lo, Int hi, unsigned workers) {
  if (h < 2 || k < 2) throw PreconditionError("gap scan needs h >= 2 and k >= 2");
  if (lo < bounds::nathanson_lower(h, k) || hi > h * k + 3 * h - 4 || hi < lo) {
    throw PreconditionError("gap scan range must lie inside [hk - h + 1, hk + 3h - 4]");
  }
  const EnumSpec spec = make_spec(h, k, lo, hi);

  struct Partial {
    std::uint64_t count = 0;
    std::map<Int, std::uint64_t> hits;
  };
  auto parts = scan_partitions<Partial>(k, spec.max_span, workers, [&](Partial& part, std::span<const Int> elements) {
    ++part.count;
    const Int card = hfold_cardinality(IntSet(std::vector<Int>(elements.begin(), elements.end())), h);
    if (card >= lo && card <= hi) ++part.hits[card];
  });

  GapScan scan{h, k, lo, hi, spec.max_span, 0, {}, {}};
  for (const auto& part : parts) {
    scan.sets_enumerated += part.count;
    for (const auto& [card, n] : part.hits) scan.attained_counts[card] += n;
  }
  for (Int c = lo; c <= hi; ++c) {
    if (!scan.attained_counts.contains(c)) scan.unattained.push_back(c);
  }
  return scan;
}

std::vector<GapClaim> gap_claims(Int h, Int k) {
  std::vector<GapClaim> out;
  if (k < 5) return out;
  const Int hk = h * k;
  auto add = [&](int item, Int min_h, Int lo, Int hi) {
    if (h >= min_h && lo <= hi) out.push_back({item, lo, hi});
  };
  add(1, 3, hk - h + 2, hk - 1);
  add(2, 4, hk + 2, hk + h - 2);
  add(3, 5, hk + h + 2, hk + 2 * h - 3);
  add(4, 6, hk + 2 * h + 2, hk + 3 * h - 4);
  return out;
}

ImplicationReport implication_table(Int k, unsigned workers) {
  if (k < 6) throw PreconditionError("implication table needs k >= 6");
  const Int span = std::max(*bounds::span_cutoff(3, k, 3 * k + 4), *bounds::span_cutoff(2, k, 2 * k + 1));

  // One list of counterexamples per implication.
  struct Partial {
    std::uint64_t count = 0;
    std::map<std::pair<Int, Int>, std::uint64_t> pairs;
    std::array<std::vector<Counterexample>, 4> bad;
  };
  auto parts = scan_partitions<Partial>(k, span, workers, [&](Partial& part, std::span<const Int> elements) {
    ++part.count;
    IntSet set(std::vector<Int>(elements.begin(), elements.end()));
    const Int two = hfold_cardinality(set, 2);
    const Int three = hfold_cardinality(set, 3);
    ++part.pairs[{two, three}];
    std::ostringstream detail;
    detail << "|2A| = " << two << ", |3A| = " << three;
    if ((two == 2 * k - 1) != (three == 3 * k - 2)) part.bad[0].push_back({set, detail.str()});
    if ((three >= 3 * k + 1 && three <= 3 * k + 2) != (two == 2 * k + 1)) part.bad[1].push_back({set, detail.str()});
    if (three == 3 * k + 3 && two != 2 * k + 2) part.bad[2].push_back({set, detail.str()});
    if (three == 3 * k + 4 && (two < 2 * k + 2 || two > 2 * k + 3)) part.bad[3].push_back({set, detail.str()});
  });

  ImplicationReport report;
  report.k = k;
  report.max_span = span;
  const std::array<const char*, 4> claims = {
      "implication: |2A| = 2k-1 iff |3A| = 3k-2",
      "implication: 3k+1 <= |3A| <= 3k+2 iff |2A| = 2k+1",
      "implication: |3A| = 3k+3 => |2A| = 2k+2",
      "implication: |3A| = 3k+4 => 2k+2 <= |2A| <= 2k+3",
  };
  std::array<std::vector<Counterexample>, 4> bad;
  for (auto& part : parts) {
    report.sets_enumerated += part.count;
    for (const auto& [key, n] : part.pairs) report.pairs[key] += n;
    for (std::size_t i = 0; i < bad.size(); ++i) {
      bad[i].insert(bad[i].end(), part.bad[i].begin(), part.bad[i].end());
    }
  }
  for (std::size_t i = 0; i < claims.size(); ++i) {
    Verdict v{claims[i], "k=" + std::to_string(k), bad[i].empty() ? Status::pass : Status::fail, std::move(bad[i]), {}};
    v.notes.push_back("max_span " + std::to_string(span));
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

}  // namespace sumsets::classify
