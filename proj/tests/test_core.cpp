#include <doctest.h>

#include <limits>
#include <random>

#include "oracle.hpp"
#include "sumsets/core.hpp"
#include "sumsets/error.hpp"

using namespace sumsets;

namespace {

std::set<Int> as_set(const IntSet& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("IntSet rejects unsorted input and sorts on request") {
  CHECK_THROWS_AS(IntSet({0, 2, 1}), PreconditionError);
  CHECK_THROWS_AS(IntSet({1, 1}), PreconditionError);
  CHECK(IntSet::from_unsorted({5, 1, 5, 3}) == IntSet{1, 3, 5});
  CHECK(IntSet{0, 1, 5}.to_string() == "{0, 1, 5}");
  CHECK_THROWS_AS(IntSet{}.min(), PreconditionError);
}

TEST_CASE("RunSet keeps maximal runs") {
  const RunSet s = RunSet::from_intervals({{10, 14}, {0, 2}, {5, 8}, {3, 3}});
  CHECK(s.runs().size() == 3);
  CHECK(s.to_string() == "0..3, 5..8, 10..14");
  CHECK(s.cardinality() == 13);
  CHECK(RunSet::from_intervals({{0, 4}, {5, 6}, {2, 3}}).to_string() == "0..6");
  CHECK(s.contains(9) == false);
  CHECK(s.contains(12));
  CHECK(RunSet({{0, 0}, {3, 10}}).to_string() == "0, 3..10");
  CHECK(RunSet().to_string() == "{}");
  CHECK_THROWS_AS(RunSet({{0, 2}, {3, 4}}), PreconditionError);
  CHECK_THROWS_AS(RunSet({{4, 5}, {0, 1}}), PreconditionError);
}

TEST_CASE("cardinality of run sets") {
  CHECK(cardinality(RunSet({{0, 2}, {5, 8}, {10, 14}})) == 12);
  CHECK(cardinality(RunSet({{0, 0}, {3, 10}})) == 9);
  CHECK(cardinality(RunSet()) == 0);
}

TEST_CASE("normalize") {
  NormalForm nf = normalize({6, 10, 14});
  CHECK(nf.offset == 6);
  CHECK(nf.dilation == 4);
  CHECK(nf.normalized == IntSet{0, 1, 2});

  nf = normalize({0, 2, 4, 6});
  CHECK(nf.offset == 0);
  CHECK(nf.dilation == 2);
  CHECK(nf.normalized == IntSet{0, 1, 2, 3});

  nf = normalize({0, 1, 5, 6, 7});
  CHECK(nf.dilation == 1);
  CHECK(nf.normalized == IntSet{0, 1, 5, 6, 7});

  nf = normalize({-7, -3, 5});
  CHECK(nf.offset == -7);
  CHECK(nf.dilation == 4);
  CHECK(nf.normalized == IntSet{0, 1, 3});

  CHECK_THROWS_WITH_AS(normalize({4}), "degenerate set", DegenerateSetError);
  CHECK_THROWS_AS(normalize({}), DegenerateSetError);
  CHECK(is_normal_form({0, 1, 5, 6, 7}));
  CHECK_FALSE(is_normal_form({0, 2, 4}));
  CHECK_FALSE(is_normal_form({1, 2, 4}));
}

TEST_CASE("reflect and canonical") {
  CHECK(reflect({0, 1, 2}) == IntSet{0, 1, 2});
  CHECK(reflect({0, 1, 5, 6, 7}) == IntSet{0, 1, 2, 6, 7});
  CHECK(reflect({0, 3, 4, 5}) == IntSet{0, 1, 2, 5});
  CHECK_THROWS_AS(reflect({}), PreconditionError);

  CHECK(canonical({0, 1, 5, 6, 7}) == IntSet{0, 1, 2, 6, 7});
  CHECK(canonical({0, 1, 2, 6, 7}) == IntSet{0, 1, 2, 6, 7});
  CHECK(canonical({3, 4, 5}) == IntSet{0, 1, 2});
  CHECK(canonical({2, 8, 10}) == IntSet{0, 1, 4});
}

TEST_CASE("minkowski_add examples") {
  const IntSet a{0, 1, 5, 6, 7};
  CHECK(minkowski_add(a, a) == RunSet({{0, 2}, {5, 8}, {10, 14}}));
  const RunSet t({{-3, -1}, {4, 4}, {9, 12}});
  CHECK(minkowski_add(RunSet({{0, 0}}), t) == t);
  CHECK(minkowski_add(IntSet{0, 3, 4, 5}, IntSet{0, 3, 4, 5}) == RunSet({{0, 0}, {3, 10}}));
  CHECK_THROWS_AS(minkowski_add(RunSet(), t), PreconditionError);
}

TEST_CASE("minkowski_add agrees with pairwise sums") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const auto a = oracle::random_set(rng, 1 + static_cast<Int>(rng() % 9), -30, 30);
    const auto b = oracle::random_set(rng, 1 + static_cast<Int>(rng() % 9), -50, 10);
    const RunSet got = minkowski_add(IntSet(a), IntSet(b));
    REQUIRE(oracle::expand(got) == oracle::sum(a, b));
    CHECK(minkowski_add_runs(RunSet::from_set(IntSet(a)), RunSet::from_set(IntSet(b))) == got);
  }
}

TEST_CASE("minkowski_add is commutative and associative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const RunSet a = RunSet::from_set(IntSet(oracle::random_set(rng, 1 + static_cast<Int>(rng() % 6), 0, 40)));
    const RunSet b = RunSet::from_set(IntSet(oracle::random_set(rng, 1 + static_cast<Int>(rng() % 6), -20, 20)));
    const RunSet c = RunSet::from_set(IntSet(oracle::random_set(rng, 1 + static_cast<Int>(rng() % 6), 5, 60)));
    CHECK(minkowski_add(a, b) == minkowski_add(b, a));
    CHECK(minkowski_add(minkowski_add(a, b), c) == minkowski_add(a, minkowski_add(b, c)));
  }
}

TEST_CASE("minkowski_add on spans too wide for a bit vector") {
  const Int far = Int{1} << 40;
  const IntSet a{0, 1, far};
  const IntSet b{0, 2, far + 5};
  const RunSet got = minkowski_add(a, b);
  CHECK(oracle::expand(got) == oracle::sum(a.vector(), b.vector()));
}

TEST_CASE("hfold examples") {
  CHECK(hfold({0, 1, 2, 3, 4}, 3) == RunSet({{0, 12}}));
  CHECK(hfold({0, 1, 2, 3, 4}, 3).cardinality() == 13);
  CHECK(hfold({0, 1, 5, 6, 7}, 2) == RunSet({{0, 2}, {5, 8}, {10, 14}}));
  CHECK(hfold({0, 3, 4, 5}, 2) == RunSet({{0, 0}, {3, 10}}));
  CHECK(hfold({0, 2, 4, 6, 7, 8, 9}, 3) == RunSet({{0, 0}, {2, 2}, {4, 4}, {6, 27}}));
  CHECK(hfold({0, 1, 2, 3, 4, 6}, 3) == RunSet({{0, 16}, {18, 18}}));
  CHECK(hfold({7}, 4) == RunSet({{28, 28}}));
  CHECK(hfold({0, 1, 5}, 1) == RunSet({{0, 1}, {5, 5}}));
}

TEST_CASE("hfold errors") {
  CHECK_THROWS_AS(hfold({0, 1}, 0), PreconditionError);
  CHECK_THROWS_AS(hfold({}, 2), PreconditionError);
  constexpr Int big = std::numeric_limits<Int>::max() / 2;
  CHECK_THROWS_AS(hfold({0, big}, 3), OverflowError);
  CHECK_THROWS_AS(hfold({-big, 0}, 3), OverflowError);
  CHECK_THROWS_AS(hfold_sequential({0, 1}, 0), PreconditionError);
}

TEST_CASE("hfold agrees with the set-based oracle, including non-normal sets") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Int k = 1 + static_cast<Int>(rng() % 7);
    const Int h = 1 + static_cast<Int>(rng() % 5);
    const Int scale = 1 + static_cast<Int>(rng() % 3);
    auto a = oracle::random_set(rng, k, -15, 25);
    for (Int& v : a) v *= scale;
    const IntSet set(a);
    const RunSet got = hfold(set, h);
    REQUIRE(oracle::expand(got) == oracle::hfold(a, h));
    CHECK(hfold_sequential(set, h) == got);
    CHECK(hfold_cardinality(set, h) == static_cast<Int>(oracle::hfold(a, h).size()));
  }
}

TEST_CASE("hfold invariance under translation, dilation, reflection") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Int k = 2 + static_cast<Int>(rng() % 6);
    const Int h = 1 + static_cast<Int>(rng() % 5);
    const auto a = oracle::random_set(rng, k, 0, 20);
    const Int shift = static_cast<Int>(rng() % 41) - 20;
    const Int dil = 1 + static_cast<Int>(rng() % 4);
    std::vector<Int> moved;
    for (Int v : a) moved.push_back(dil * v + shift);
    const IntSet base(a);
    const RunSet s = hfold(base, h);
    std::set<Int> expected;
    for (Int v : oracle::expand(s)) expected.insert(dil * v + h * shift);
    CHECK(oracle::expand(hfold(IntSet(moved), h)) == expected);
    CHECK(hfold_cardinality(reflect(base), h) == s.cardinality());
    CHECK(hfold_cardinality(normalize(base).normalized, h) == s.cardinality());
  }
}
