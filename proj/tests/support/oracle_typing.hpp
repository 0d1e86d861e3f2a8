#pragma once

#include "cpeg/ret.hpp"
#include "cpeg/tree.hpp"

namespace cpeg::testing {

/// Brute-force derivation search over the tree typing rules, enumerating
/// splits directly. Independent of the library's matcher. `depth` bounds
/// the search; exhausting it throws.
bool oracle_member(const Tree& v, const RetType& t, const GlobalSet& e,
                   int depth = 256);

}  // namespace cpeg::testing
