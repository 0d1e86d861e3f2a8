#include "cpeg/charset.hpp"

#include <algorithm>

namespace cpeg {

CharSet CharSet::single(char32_t c) { return range(c, c); }

CharSet CharSet::range(char32_t lo, char32_t hi) {
  CharSet set;
  set.add(lo, hi);
  return set;
}

CharSet CharSet::any() {
  CharSet set;
  set.add(0, 0xD7FF);
  set.add(0xE000, max_scalar);
  return set;
}

void CharSet::add(char32_t lo, char32_t hi) {
  if (lo > hi) std::swap(lo, hi);
  std::vector<Range> merged;
  merged.reserve(ranges_.size() + 1);
  bool inserted = false;
  for (const Range& r : ranges_) {
    if (r.hi != max_scalar && r.hi + 1 < lo) {
      merged.push_back(r);
    } else if (hi != max_scalar && hi + 1 < r.lo) {
      if (!inserted) {
        merged.push_back({lo, hi});
        inserted = true;
      }
      merged.push_back(r);
    } else {
      // Overlapping or adjacent: widen the pending range.
      lo = std::min(lo, r.lo);
      hi = std::max(hi, r.hi);
    }
  }
  if (!inserted) merged.push_back({lo, hi});
  ranges_ = std::move(merged);
}

void CharSet::add(const CharSet& other) {
  for (const Range& r : other.ranges_) add(r.lo, r.hi);
}

bool CharSet::contains(char32_t c) const {
  auto it = std::upper_bound(
      ranges_.begin(), ranges_.end(), c,
      [](char32_t value, const Range& r) { return value < r.lo; });
  if (it == ranges_.begin()) return false;
  --it;
  return c >= it->lo && c <= it->hi;
}

bool CharSet::is_single() const {
  return ranges_.size() == 1 && ranges_.front().lo == ranges_.front().hi;
}

std::size_t CharSet::count() const {
  std::size_t total = 0;
  for (const Range& r : ranges_) total += static_cast<std::size_t>(r.hi - r.lo) + 1;
  return total;
}

}  // namespace cpeg
