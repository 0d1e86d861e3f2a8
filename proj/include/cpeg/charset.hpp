#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace cpeg {

/// Set of Unicode scalar values, stored as sorted, disjoint,
/// non-adjacent inclusive ranges.
class CharSet {
public:
  struct Range {
    char32_t lo;
    char32_t hi;
    auto operator<=>(const Range&) const = default;
  };

  static constexpr char32_t max_scalar = 0x10FFFF;

  CharSet() = default;

  static CharSet single(char32_t c);
  static CharSet range(char32_t lo, char32_t hi);
  /// Every Unicode scalar value (surrogates excluded).
  static CharSet any();

  void add(char32_t lo, char32_t hi);
  void add(const CharSet& other);

  bool contains(char32_t c) const;
  bool empty() const { return ranges_.empty(); }
  bool is_single() const;
  bool is_any() const { return *this == any(); }
  char32_t first() const { return ranges_.front().lo; }
  std::size_t count() const;

  const std::vector<Range>& ranges() const { return ranges_; }

  bool operator==(const CharSet&) const = default;

private:
  std::vector<Range> ranges_;
};

}  // namespace cpeg
