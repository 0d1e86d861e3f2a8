#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "cpeg/grammar.hpp"
#include "cpeg/tree.hpp"

namespace cpeg {

/// Outcome of evaluating an expression: a tree and the end position on
/// success, nothing on failure. Positions are scalar-value offsets.
/// On failure `end` equals the position evaluation started from (failure
/// backtracks). `furthest` is a diagnostic: the rightmost position where a
/// character match was attempted and failed.
struct ParseOutcome {
  std::optional<Tree> tree;
  std::size_t end = 0;
  std::size_t furthest = 0;

  bool ok() const { return tree.has_value(); }
  const Tree& value() const { return *tree; }
};

struct ParseOptions {
  /// When set, a successful evaluation that leaves input unconsumed is
  /// reported as a failure.
  bool full_match = false;
  /// Recursion budget; exceeding it throws DepthLimitError. Guards deeply
  /// nested inputs (left recursion should be rejected up front instead).
  std::size_t max_depth = 8192;
};

/// Evaluates an expression against decoded input starting at `pos`.
/// The grammar must have passed the static checks; in particular it must
/// not be left recursive.
ParseOutcome eval(const Grammar& g, const Expression& e,
                  std::u32string_view input, std::size_t pos,
                  const ParseOptions& options = {});

/// Runs the start expression from position 0 over UTF-8 input.
ParseOutcome parse(const Grammar& g, std::string_view input,
                   const ParseOptions& options = {});

/// Scalar-value length of UTF-8 input, for relating positions to it.
std::size_t scalar_length(std::string_view input);

}  // namespace cpeg
