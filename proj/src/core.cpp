#include "sumsets/core.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>

#include "checked.hpp"
#include "sumsets/error.hpp"

namespace sumsets {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

namespace {

// Result spans above this many bits go through the run-pair kernel instead.
constexpr Int kDenseSpanLimit = Int{1} << 26;

/// Fixed-width bit vector over [0, size).
class Bits {
 public:
  explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  void set_range(std::size_t lo, std::size_t hi) {
    for (std::size_t w = lo / 64; w <= hi / 64; ++w) {
      std::size_t from = (w == lo / 64) ? lo % 64 : 0;
      std::size_t to = (w == hi / 64) ? hi % 64 : 63;
      std::uint64_t mask = (to == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (to + 1)) - 1)) &
                           ~((std::uint64_t{1} << from) - 1);
      words_[w] |= mask;
    }
  }

  /// this |= src << shift, truncated to size().
  void or_shifted(const Bits& src, std::size_t shift) {
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    const std::size_t n = words_.size();
    for (std::size_t i = n; i-- > word_shift;) {
      const std::size_t j = i - word_shift;
      std::uint64_t v = 0;
      if (j < src.words_.size()) v = src.words_[j] << bit_shift;
      if (bit_shift && j >= 1 && j - 1 < src.words_.size()) v |= src.words_[j - 1] >> (64 - bit_shift);
      words_[i] |= v;
    }
    trim();
  }

  /// OR of this shifted by 0..len-1, by doubling.
  Bits smeared(std::size_t len) const {
    Bits out = *this;
    std::size_t covered = 1;
    while (covered < len) {
      std::size_t step = std::min(covered, len - covered);
      Bits shifted = out;
      out.or_shifted(shifted, step);
      covered += step;
    }
    return out;
  }

  /// Maximal runs of set bits, each shifted by `offset`.
  std::vector<Run> runs(Int offset) const {
    std::vector<Run> out;
    std::size_t pos = 0;
    while (pos < size_) {
      pos = next(pos, true);
      if (pos >= size_) break;
      std::size_t end = next(pos, false);
      out.push_back({offset + static_cast<Int>(pos), offset + static_cast<Int>(end - 1)});
      pos = end;
    }
    return out;
  }

 private:
  // First index >= pos whose bit equals `value`, or size_.
  std::size_t next(std::size_t pos, bool value) const {
    std::size_t w = pos / 64;
    std::uint64_t word = value ? words_[w] : ~words_[w];
    word &= ~std::uint64_t{0} << (pos % 64);
    while (true) {
      if (word) {
        std::size_t idx = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        return std::min(idx, size_);
      }
      if (++w >= words_.size()) return size_;
      word = value ? words_[w] : ~words_[w];
    }
  }

  void trim() {
    if (size_ % 64) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

void require_nonempty(const RunSet& s) {
  if (s.empty()) throw PreconditionError("Minkowski sum of an empty set");
}

RunSet dense_add(const RunSet& lhs, const RunSet& rhs, Int base, Int span) {
  // Iterate over the operand with fewer runs; the other one is smeared and shifted.
  const RunSet& small = lhs.runs().size() <= rhs.runs().size() ? lhs : rhs;
  const RunSet& big = &small == &lhs ? rhs : lhs;
  const std::size_t size = static_cast<std::size_t>(span) + 1;

  Bits big_bits(size);
  for (const Run& r : big.runs()) {
    big_bits.set_range(static_cast<std::size_t>(r.lo - big.min()),
                       static_cast<std::size_t>(r.hi - big.min()));
  }

  Bits acc(size);
  std::map<Int, Bits> smear_cache;
  for (const Run& r : small.runs()) {
    auto it = smear_cache.find(r.length());
    if (it == smear_cache.end()) {
      it = smear_cache.emplace(r.length(), big_bits.smeared(static_cast<std::size_t>(r.length()))).first;
    }
    acc.or_shifted(it->second, static_cast<std::size_t>(r.lo - small.min()));
  }
  return RunSet(acc.runs(base));
}

}  // namespace

NormalForm normalize(const IntSet& set) {
  if (set.size() < 2) throw DegenerateSetError();
  const Int offset = set.min();
  Int d = 0;
  for (Int a : set) d = std::gcd(d, checked_sub(a, offset));
  std::vector<Int> normalized;
  normalized.reserve(set.size());
  for (Int a : set) normalized.push_back((a - offset) / d);
  return {offset, d, IntSet(std::move(normalized))};
}

bool is_normal_form(const IntSet& set) {
  if (set.empty() || set.min() != 0) return false;
  Int d = 0;
  for (Int a : set) d = std::gcd(d, a);
  return d == 1;
}

IntSet reflect(const IntSet& set) {
  if (set.empty()) throw PreconditionError("reflect of an empty set");
  const Int top = set.max();
  std::vector<Int> out;
  out.reserve(set.size());
  for (auto it = set.vector().rbegin(); it != set.vector().rend(); ++it) {
    out.push_back(checked_sub(top, *it));
  }
  return IntSet(std::move(out));
}

IntSet canonical(const IntSet& set) {
  IntSet direct = normalize(set).normalized;
  IntSet mirrored = normalize(reflect(set)).normalized;
  return std::min(direct, mirrored);
}

RunSet minkowski_add_runs(const RunSet& lhs, const RunSet& rhs) {
  require_nonempty(lhs);
  require_nonempty(rhs);
  std::vector<Run> sums;
  sums.reserve(lhs.runs().size() * rhs.runs().size());
  for (const Run& a : lhs.runs()) {
    for (const Run& b : rhs.runs()) {
      sums.push_back({checked_add(a.lo, b.lo), checked_add(a.hi, b.hi)});
    }
  }
  return RunSet::from_intervals(std::move(sums));
}

RunSet minkowski_add(const RunSet& lhs, const RunSet& rhs) {
  require_nonempty(lhs);
  require_nonempty(rhs);
  const Int base = checked_add(lhs.min(), rhs.min());
  checked_add(lhs.max(), rhs.max());
  // Spans are nonnegative, but each one can still exceed the signed range.
  Int span_l = 0, span_r = 0, span = 0;
  if (__builtin_sub_overflow(lhs.max(), lhs.min(), &span_l) ||
      __builtin_sub_overflow(rhs.max(), rhs.min(), &span_r) ||
      __builtin_add_overflow(span_l, span_r, &span) || span > kDenseSpanLimit) {
    return minkowski_add_runs(lhs, rhs);
  }
  return dense_add(lhs, rhs, base, span);
}

RunSet minkowski_add(const IntSet& lhs, const IntSet& rhs) {
  return minkowski_add(RunSet::from_set(lhs), RunSet::from_set(rhs));
}

namespace {

void check_hfold_args(const IntSet& set, Int h) {
  if (set.empty()) throw PreconditionError("h-fold sumset of an empty set");
  if (h < 1) throw PreconditionError("h must be at least 1");
  if (__builtin_mul_overflow_p(h, set.min(), Int{0}) || __builtin_mul_overflow_p(h, set.max(), Int{0})) {
    throw OverflowError("h * element exceeds the 64-bit integer range");
  }
}

}  // namespace

RunSet hfold(const IntSet& set, Int h) {
  check_hfold_args(set, h);
  if (set.size() == 1) {
    const Int v = h * set.min();
    return RunSet({{v, v}});
  }

  const NormalForm nf = normalize(set);
  const RunSet base = RunSet::from_set(nf.normalized);
  std::optional<RunSet> acc;
  RunSet power = base;
  for (Int e = h;;) {
    if (e & 1) acc = acc ? minkowski_add(*acc, power) : power;
    e >>= 1;
    if (!e) break;
    power = minkowski_add(power, power);
  }

  const Int shift = checked_mul(h, nf.offset);
  if (nf.dilation == 1) {
    std::vector<Run> runs;
    runs.reserve(acc->runs().size());
    for (const Run& r : acc->runs()) runs.push_back({checked_add(r.lo, shift), checked_add(r.hi, shift)});
    return RunSet(std::move(runs));
  }
  std::vector<Run> points;
  points.reserve(static_cast<std::size_t>(acc->cardinality()));
  for (const Run& r : acc->runs()) {
    for (Int v = r.lo; v <= r.hi; ++v) {
      const Int p = checked_add(checked_mul(v, nf.dilation), shift);
      points.push_back({p, p});
    }
  }
  return RunSet(std::move(points));
}

RunSet hfold_sequential(const IntSet& set, Int h) {
  check_hfold_args(set, h);
  const RunSet base = RunSet::from_set(set);
  RunSet acc = base;
  for (Int i = 1; i < h; ++i) acc = minkowski_add(acc, base);
  return acc;
}

Int hfold_cardinality(const IntSet& set, Int h) { return hfold(set, h).cardinality(); }

}  // namespace sumsets
