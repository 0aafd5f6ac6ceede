#include "sumsets/families.hpp"

#include <algorithm>
#include <sstream>

#include "checked.hpp"
#include "sumsets/error.hpp"

namespace sumsets::families {

using detail::checked_add;
using detail::checked_mul;

std::string FamilyPattern::to_string() const {
  std::ostringstream out;
  out << "[0," << span_top << "]\\{";
  for (std::size_t i = 0; i < holes.size(); ++i) out << (i ? "," : "") << holes[i];
  out << '}';
  return out.str();
}

IntSet family_set(const FamilyPattern& pattern) {
  if (pattern.holes.empty() || pattern.holes.size() > 3) {
    throw PreconditionError("a family pattern removes between 1 and 3 holes");
  }
  for (std::size_t i = 0; i < pattern.holes.size(); ++i) {
    const Int hole = pattern.holes[i];
    if (hole < 1 || hole > pattern.span_top) throw PreconditionError("hole outside [1, span_top]");
    if (i && pattern.holes[i - 1] >= hole) throw PreconditionError("holes must be strictly increasing");
  }
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(pattern.size()));
  for (Int v = 0; v <= pattern.span_top; ++v) {
    if (!std::binary_search(pattern.holes.begin(), pattern.holes.end(), v)) out.push_back(v);
  }
  return IntSet(std::move(out));
}

IntSet interval_minus(Int n, std::vector<Int> holes) { return family_set({n, std::move(holes)}); }

RunSet mirror(const RunSet& set, Int top) {
  std::vector<Run> runs;
  runs.reserve(set.runs().size());
  for (auto it = set.runs().rbegin(); it != set.runs().rend(); ++it) runs.push_back({top - it->hi, top - it->lo});
  return RunSet(std::move(runs));
}

namespace {

RunSet runs(std::vector<Run> intervals) { return RunSet::from_intervals(std::move(intervals)); }

Prediction with_structure(RunSet structure, std::string source) {
  const Int card = structure.cardinality();
  return {card, std::move(structure), std::move(source)};
}

Prediction card_only(Int card, std::string source) { return {card, std::nullopt, std::move(source)}; }

void require_base(Int h, Int k) {
  if (h < 2 || k < 5) throw HypothesisError("outside proposition hypotheses: needs h >= 2 and k >= 5");
}

}  // namespace

IntSet prop31_set(Int x, Int y, SingletonGapVariant variant) {
  if (x < 1 || y < x) throw PreconditionError("needs 1 <= x <= y");
  std::vector<Int> out;
  if (variant == SingletonGapVariant::a) {
    out.push_back(0);
    for (Int v = x; v <= y; ++v) out.push_back(v);
  } else {
    for (Int v = 0; v <= y - x; ++v) out.push_back(v);
    out.push_back(y);
  }
  return IntSet(std::move(out));
}

Prediction prop31_predict(Int h, Int x, Int y, SingletonGapVariant variant) {
  if (h < 1 || x < 1) throw PreconditionError("needs h >= 1 and x >= 1");
  if (y < 2 * x - 1) throw HypothesisError("hypothesis violated: needs y >= 2x - 1");
  const Int top = checked_mul(h, y);
  if (variant == SingletonGapVariant::a) {
    // Cardinality hy - x + 2 for both variants.
    return with_structure(runs({{0, 0}, {x, top}}), "prop31/a");
  }
  return with_structure(runs({{0, top - x}, {top, top}}), "prop31/b");
}

Prediction prop32_predict(Int h, Int k, Int x) {
  require_base(h, k);
  if (x < 1 || x > k - 1) throw HypothesisError("outside proposition hypotheses: needs 1 <= x <= k - 1");
  const Int top = checked_mul(h, k + 2);

  if (x == 1 || x == k - 1) {
    RunSet s = runs({{0, 0}, {4, top}});
    if (x == k - 1) s = mirror(s, top);
    return with_structure(std::move(s), "prop32/{x,x+1,x+2} x in {1,k-1}");  // h(k+2) - 2
  }
  if (x == 2 || x == k - 2) {
    RunSet s;
    if (h >= 4) {
      s = runs({{0, top}});
    } else if (h == 3) {
      s = runs({{0, 3}, {5, top}});
    } else if (k >= 6) {
      s = runs({{0, 2}, {5, top}});
    } else {
      s = runs({{0, 2}, {5, 8}, {10, 14}});
    }
    if (x != 2) s = mirror(s, top);
    Prediction p = with_structure(std::move(s), "prop32/{x,x+1,x+2} x in {2,k-2}");
    // The h = 3 value is stated as 3k + 6.
    if (h == 3 && p.cardinality != 3 * k + 6) throw Error("internal: h = 3 edge case disagrees with 3k + 6");
    return p;
  }
  // 3 <= x <= k - 3, so k >= 6 here.
  if (h >= 3) return with_structure(runs({{0, top}}), "prop32/{x,x+1,x+2} 3<=x<=k-3");
  if (x >= 4 && x <= k - 4) {
    return with_structure(runs({{0, 2 * k + 4}}), "prop32/{x,x+1,x+2} h=2 4<=x<=k-4");  // 2k + 5
  }
  // x in {3, k-3}: stated as 2A = [0,4] u [6, 2(k+2)], |2A| = 2k + 4.
  RunSet s = runs({{0, 4}, {6, 2 * k + 4}});
  if (x != 3) s = mirror(s, top);
  return {2 * k + 4, std::move(s), "prop32/{x,x+1,x+2} h=2 x in {3,k-3}"};
}

Prediction prop33_predict(Int h, Int k, Int x, Int z) {
  require_base(h, k);
  if (x < 1 || z < x + 3 || z > k + 1) {
    throw HypothesisError("outside proposition hypotheses: needs 1 <= x <= z - 3 <= k - 2");
  }
  const Int top = checked_mul(h, k + 2);

  if (x == 1 && z == 4) return with_structure(runs({{0, 0}, {3, 3}, {5, top}}), "prop33/{1,2,4}");
  if (x == 1 && z == k + 1) {
    return with_structure(runs({{0, 0}, {3, top - 2}, {top, top}}), "prop33/{1,2,k+1}");
  }
  if (x == 1) {  // 5 <= z <= k
    if (z == 5) return with_structure(runs({{0, 0}, {3, 4}, {6, top}}), "prop33/{1,2,i} i=5");
    return with_structure(runs({{0, 0}, {3, top}}), "prop33/{1,2,i} 6<=i<=k");
  }
  if (x == 2 && z == 5) {
    if (h >= 3) return with_structure(runs({{0, top}}), "prop33/{2,3,5}");
    if (k >= 6) return with_structure(runs({{0, 2}, {4, 2 * k + 4}}), "prop33/{2,3,5}");
    return with_structure(runs({{0, 2}, {4, 8}, {10, 14}}), "prop33/{2,3,5}");
  }
  if (x == 2 && z == k + 1) {
    if (h >= 3) return with_structure(runs({{0, top - 2}, {top, top}}), "prop33/{2,3,k+1}");
    return with_structure(runs({{0, 2}, {4, 2 * k + 2}, {2 * k + 4, 2 * k + 4}}), "prop33/{2,3,k+1}");
  }
  if (x == 2) {  // 6 <= z <= k
    if (h >= 3) return with_structure(runs({{0, top}}), "prop33/{2,3,i}");
    return with_structure(runs({{0, 2}, {4, 2 * k + 4}}), "prop33/{2,3,i}");
  }
  if (x == k - 2 && z == k + 1) {
    return with_structure(runs({{0, top - 4}, {top - 2, top - 2}, {top, top}}), "prop33/{k-2,k-1,k+1}");
  }
  if (z == k + 1) {  // 3 <= x <= k - 3
    return with_structure(runs({{0, top - 2}, {top, top}}), "prop33/{i,i+1,k+1}");
  }
  if (z == x + 3) {  // 3 <= x <= k - 3
    if (h >= 3) return with_structure(runs({{0, top}}), "prop33/{i,i+1,i+3}");
    if (x <= k - 4) return with_structure(runs({{0, 2 * k + 4}}), "prop33/{i,i+1,i+3}");
    return with_structure(runs({{0, 2 * k - 2}, {2 * k, 2 * k + 4}}), "prop33/{i,i+1,i+3}");
  }
  // 3 <= x <= z - 4 <= k - 4
  return with_structure(runs({{0, top}}), "prop33/{i,i+1,j}");
}

Prediction prop34_predict(Int h, Int k, Int x, Int y, Int z) {
  require_base(h, k);
  if (x < 1 || y < x + 2 || z < y + 2 || z > k + 1) {
    throw HypothesisError("outside proposition hypotheses: needs 1 <= x <= y - 2 <= z - 4 <= k - 3");
  }
  const Int top = checked_mul(h, k + 2);
  auto is = [&](Int a, Int b, Int c) { return x == a && y == b && z == c; };

  if (is(1, 3, 5)) return with_structure(runs({{0, 0}, {2, 2}, {4, 4}, {6, top}}), "prop34/{1,3,5}");
  if (is(k - 3, k - 1, k + 1)) {
    return with_structure(mirror(runs({{0, 0}, {2, 2}, {4, 4}, {6, top}}), top), "prop34/{k-3,k-1,k+1}");
  }
  const RunSet edge_pair = runs({{0, 0}, {2, top - 4}, {top - 2, top - 2}, {top, top}});
  if (is(1, k - 1, k + 1)) return with_structure(edge_pair, "prop34/{1,k-1,k+1}");
  if (is(1, 3, k + 1)) return with_structure(mirror(edge_pair, top), "prop34/{1,3,k+1}");

  const RunSet low_pair = runs({{0, 0}, {2, 2}, {4, top}});
  if (x == 1 && y == 3 && z >= 6 && z <= k) return with_structure(low_pair, "prop34/{1,3,i}");
  if (y == k - 1 && z == k + 1 && x >= 2 && x <= k - 4) {
    return with_structure(mirror(low_pair, top), "prop34/{i,k-1,k+1}");
  }
  if (y == x + 2 && z == x + 4 && x >= 2 && x <= k - 4) {
    return with_structure(runs({{0, top}}), "prop34/{i,i+2,i+4}");
  }
  if (y == x + 2 && z == k + 1 && x >= 2 && x <= k - 4) {
    return with_structure(runs({{0, top - 2}, {top, top}}), "prop34/{i,i+2,k+1}");
  }
  if (x == 1 && z == y + 2 && y >= 4 && y <= k - 2) {
    return with_structure(runs({{0, 0}, {2, top}}), "prop34/{1,i,i+2}");
  }
  if (y == x + 2 && x >= 2 && z >= x + 5 && z <= k) return with_structure(runs({{0, top}}), "prop34/{i,i+2,j}");
  if (z == y + 2 && x >= 2 && y >= x + 3 && y <= k - 2) {
    return with_structure(runs({{0, top}}), "prop34/{i,j,j+2}");
  }
  if (x == 1 && z == k + 1 && y >= 4 && y <= k - 2) {
    return with_structure(runs({{0, 0}, {2, top - 2}, {top, top}}), "prop34/{1,i,k+1}");
  }
  if (x == 1 && y >= 4 && z >= y + 3 && z <= k) return with_structure(runs({{0, 0}, {2, top}}), "prop34/{1,i,j}");
  if (z == k + 1 && x >= 2 && y >= x + 3 && y <= k - 2) {
    return with_structure(runs({{0, top - 2}, {top, top}}), "prop34/{i,j,k+1}");
  }
  if (x >= 2 && y >= x + 3 && z >= y + 3 && z <= k) return with_structure(runs({{0, top}}), "prop34/spread");
  throw HypothesisError("outside proposition hypotheses: no case covers these holes");
}

IntSet tang_xing_set(Int k, std::span<const Int> holes) {
  if (holes.size() == 1) return interval_minus(k, {holes[0]});
  if (holes.size() == 2) return interval_minus(k + 1, {holes[0], holes[1]});
  throw PreconditionError("tang_xing_set takes one or two holes");
}

Prediction tang_xing_predict(Int h, Int k, std::span<const Int> holes) {
  if (h < 2 || k < 5) throw HypothesisError("outside theorem hypotheses: needs h >= 2 and k >= 5");
  const Int hk = checked_mul(h, k);
  if (holes.size() == 1) {
    const Int x = holes[0];
    if (x < 1 || x > k - 1) throw HypothesisError("one hole must lie in [1, k-1]");
    if (x == 1 || x == k - 1) return card_only(hk, "thm15/x in {1,k-1}");
    return card_only(hk + 1, "thm15/2<=x<=k-2");
  }
  if (holes.size() != 2) throw HypothesisError("one or two holes expected");
  const Int x = holes[0], y = holes[1];
  if (x < 1 || y <= x || y > k) throw HypothesisError("two holes must satisfy 1 <= x < y <= k");
  auto is = [&](Int a, Int b) { return x == a && y == b; };

  if (is(1, 2) || is(k - 1, k) || is(1, k) || is(1, 3) || is(k - 2, k)) return card_only(hk + h - 1, "thm16/a");
  if (h == 2 && (is(2, 3) || is(k - 2, k - 1))) return card_only(hk + h, "thm16/b h=2 exception");
  if ((x == 1 && y >= 4 && y <= k - 1) || (x >= 2 && x <= k - 3 && y == k)) return card_only(hk + h, "thm16/b");
  if (x >= 2 && y <= k - 1) return card_only(hk + h + 1, "thm16/c");
  throw HypothesisError("outside theorem hypotheses: no case covers these holes");
}

}  // namespace sumsets::families
