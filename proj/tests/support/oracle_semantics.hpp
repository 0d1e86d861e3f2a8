#pragma once

#include <string>
#include <vector>

#include "cpeg/grammar.hpp"
#include "cpeg/tree.hpp"

namespace cpeg::testing {

/// One derivable conclusion of the evaluation relation for an
/// (expression, input) pair: success with a tree, or failure; `rest` is the
/// unconsumed suffix.
struct RelOutcome {
  bool success = false;
  Tree value;
  std::u32string rest;
};

/// Searches the evaluation rules as a relation, suffix-passing, and returns
/// every derivable conclusion. Independent of the engine's recursive-descent
/// path. `fuel` bounds rule applications; exhausting it throws.
std::vector<RelOutcome> derive_outcomes(const Grammar& g, const Expression& e,
                                        const std::u32string& input,
                                        long& fuel);

/// Asserts the relation is deterministic (exactly one conclusion) and
/// returns it.
RelOutcome oracle_eval(const Grammar& g, const Expression& e,
                       const std::u32string& input, long fuel = 2'000'000);

}  // namespace cpeg::testing
