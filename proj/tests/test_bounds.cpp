#include <doctest.h>

#include "oracle.hpp"
#include "sumsets/bounds.hpp"
#include "sumsets/core.hpp"
#include "sumsets/error.hpp"

using namespace sumsets;
using namespace sumsets::bounds;

TEST_CASE("nathanson_lower") {
  CHECK(nathanson_lower(3, 5) == 13);
  CHECK(nathanson_lower(1, 9) == 9);
  CHECK(nathanson_lower(2, 6) == 11);
  CHECK_THROWS_AS(nathanson_lower(0, 5), PreconditionError);
}

TEST_CASE("freiman_2a_lower") {
  CHECK(freiman_2a_lower(5, 6) == 11);
  CHECK(freiman_2a_lower(5, 7) == 12);
  CHECK(freiman_2a_lower(5, 8) == 12);
  CHECK(freiman_2a_lower(5, 40) == 12);
  CHECK_THROWS_WITH_AS(freiman_2a_lower(5, 3), "impossible span for k distinct elements", PreconditionError);
  CHECK_THROWS_AS(freiman_2a_lower(2, 3), PreconditionError);
}

TEST_CASE("lev bounds") {
  CHECK(lev_step_lower(2, 5, 7, 5) == 12);
  CHECK(lev_step_lower(3, 5, 7, 12) == 19);
  CHECK(lev_chain_lower(3, 5, 7) == 19);
  CHECK(lev_chain_lower(2, 5, 5) == 10);
  CHECK(lev_chain_lower(4, 6, 20) == 45);
}

TEST_CASE("direct bounds never exceed the exact size") {
  for (Int k = 3; k <= 6; ++k) {
    for (const auto& a : oracle::normal_sets(k, k + 5)) {
      const IntSet set(a);
      const Int last = set.max();
      Int prev = k;
      for (Int h = 2; h <= 4; ++h) {
        const Int card = static_cast<Int>(oracle::hfold(a, h).size());
        CHECK(nathanson_lower(h, k) <= card);
        CHECK(lev_step_lower(h, k, last, prev) <= card);
        CHECK(lev_chain_lower(h, k, last) <= card);
        if (h == 2) CHECK(freiman_2a_lower(k, last) <= card);
        prev = card;
      }
    }
  }
}

TEST_CASE("span_cutoff") {
  CHECK(span_cutoff(2, 5, 9) == Int{4});
  CHECK(span_cutoff(2, 2, 3) == Int{1});
  // |2A| <= 12 leaves the span unbounded for k = 5: the chain tops out at 3k - 3.
  CHECK_FALSE(span_cutoff(2, 5, 12).has_value());
  // Anything below hk + 3h - 4 sits inside [0, k + 2].
  const auto c = span_cutoff(3, 6, 3 * 6 + 3 * 3 - 5);
  REQUIRE(c.has_value());
  CHECK(*c >= 8);
}

TEST_CASE("span_cutoff bounds every normal set with small |hA|") {
  for (Int h = 2; h <= 4; ++h) {
    for (Int k = 3; k <= 6; ++k) {
      for (Int target = nathanson_lower(h, k); target <= h * k + 3 * h; ++target) {
        const auto cut = span_cutoff(h, k, target);
        if (!cut) continue;
        for (const auto& a : oracle::normal_sets(k, *cut + 3)) {
          if (a.back() <= *cut) continue;
          CHECK(static_cast<Int>(oracle::hfold(a, h).size()) > target);
        }
      }
    }
  }
}

TEST_CASE("span lemma inequality reduces to (h-1)(k-5) >= 0") {
  for (Int h = 2; h <= 12; ++h) {
    for (Int k = 5; k <= 20; ++k) {
      const Int lhs = k + (h - 2) * (2 * k - 2) + 2 * k - 3;
      const Int rhs = h * k + 3 * h - 4;
      CHECK(lhs - rhs == (h - 1) * (k - 5));
      CHECK(lev_chain_lower(h, k, 2 * k - 2) == lhs);
      if (k == 5) CHECK(lhs == rhs);
      if (k >= 6) CHECK(lhs > rhs);
    }
  }
}

TEST_CASE("interval closure examples") {
  CHECK(interval_closure_holds(3, 2, 1, 6, 2));
  CHECK(hfold({0, 1, 2, 4, 5, 6}, 2) == RunSet({{0, 12}}));
  CHECK(interval_closure_holds(4, 4, 3, 10, 3));
  CHECK_FALSE(interval_closure_holds(2, 2, 3, 8, 2));
  CHECK(interval_closure_two_block(3, 1, 6, 2));
  CHECK_FALSE(interval_closure_two_block(3, 2, 6, 2));
  CHECK_THROWS_AS(interval_closure_holds(3, 4, 1, 9, 2), PreconditionError);
  CHECK_THROWS_AS(interval_closure_holds(3, 2, 5, 8, 2), PreconditionError);
  CHECK_THROWS_AS(interval_closure_two_block(1, 0, 4, 2), PreconditionError);
}

TEST_CASE("interval closure predicate implies hA = [0, hy]") {
  for (Int x = 2; x <= 7; ++x) {
    for (Int y = x + 1; y <= 14; ++y) {
      for (Int r = 0; x + r <= y - 1; ++r) {
        std::vector<Int> a;
        for (Int v = 0; v < x; ++v) a.push_back(v);
        for (Int v = x + r; v <= y; ++v) a.push_back(v);
        for (Int h = 1; h <= 5; ++h) {
          const bool full = oracle::hfold(a, h).size() == static_cast<std::size_t>(h * y + 1);
          for (Int t = 2; t <= x && x + r <= y - t + 1; ++t) {
            if (interval_closure_holds(x, t, r, y, h)) CHECK(full);
          }
          if (a.size() >= 4 && interval_closure_two_block(x, r, y, h)) CHECK(full);
        }
      }
    }
  }
}

TEST_CASE("residue membership") {
  const IntSet a{0, 3, 4, 8, 9};
  // a_1 = 3, m = 7: 3 + 1 = 4 is in 2A, so 7 is in 3A.
  CHECK(residue_membership(a, 1, 7, 3));
  CHECK(oracle::hfold(a.vector(), 3).count(7) == 1);
  // m = a_t: a_t + 0 is a_t + a_0.
  for (std::size_t t = 1; t < a.size(); ++t) CHECK(residue_membership(a, t, a[t], 2));
  // {0, 2, 5}: 2 + (3 mod 2) = 3 is not in 2A = {0, 2, 4, 5, 7, 10}.
  CHECK_FALSE(residue_membership({0, 2, 5}, 1, 3, 2));
  CHECK_THROWS_AS(residue_membership({1, 2, 5}, 1, 3, 2), PreconditionError);
  CHECK_THROWS_AS(residue_membership(a, 1, 9, 3), PreconditionError);
  CHECK_THROWS_AS(residue_membership(a, 0, 1, 3), PreconditionError);
  CHECK_THROWS_AS(residue_membership(a, 9, 4, 3), PreconditionError);
}

TEST_CASE("residue membership implies m in hA") {
  for (Int k = 2; k <= 5; ++k) {
    for (const auto& a : oracle::normal_sets(k, 9)) {
      const IntSet set(a);
      for (Int h = 2; h <= 4; ++h) {
        const auto sum = oracle::hfold(a, h);
        for (std::size_t t = 1; t < set.size(); ++t) {
          for (Int m = set[t]; m <= h * set[t] - 1; ++m) {
            if (residue_membership(set, t, m, h)) CHECK(sum.count(m) == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("in_two_fold") {
  CHECK(in_two_fold({0, 2, 5}, 7));
  CHECK_FALSE(in_two_fold({0, 2, 5}, 3));
  CHECK(in_two_fold({-4, 1}, -8));
}

TEST_CASE("freiman containment") {
  CHECK(freiman_containment_check({0, 1, 2, 3, 4}));
  CHECK(freiman_containment_check({0, 2, 3, 4, 5}));
  CHECK_THROWS_AS(freiman_containment_check({0, 2, 4}), PreconditionError);
  CHECK_THROWS_AS(freiman_containment_check({0, 1}), PreconditionError);
  for (Int k = 3; k <= 6; ++k) {
    for (const auto& a : oracle::normal_sets(k, 2 * k + 2)) {
      const Int doubled = static_cast<Int>(oracle::hfold(a, 2).size());
      const bool expected = doubled >= 3 * k - 3 || a.back() <= doubled - k;
      CHECK(freiman_containment_check(IntSet(a)) == expected);
    }
  }
}

TEST_CASE("direct_bounds lists the applicable bounds") {
  const auto reports = direct_bounds({0, 1, 5, 6, 7}, 2);
  REQUIRE(reports.size() == 4);
  CHECK(reports[0].kind == BoundKind::nathanson);
  CHECK(reports[0].value == 9);
  CHECK(reports[1].kind == BoundKind::freiman_2a);
  CHECK(reports[1].value == 12);
  CHECK(reports[3].kind == BoundKind::lev_chain);
  CHECK(reports[3].value == 12);
  CHECK(direct_bounds({4}, 3).size() == 1);
}
