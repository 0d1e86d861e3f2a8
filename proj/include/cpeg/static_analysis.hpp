#pragma once

#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "cpeg/grammar.hpp"

namespace cpeg {

struct Violation {
  std::string rule;
  std::string path;  // slash-joined steps into the rule body
  std::string reason;

  bool operator==(const Violation&) const = default;
};

/// Result of the well-formedness check. Well-formed iff no violations.
struct WellFormednessReport {
  std::vector<Violation> violations;

  bool is_well_formed() const { return violations.empty(); }
  std::string to_text() const;
  nlohmann::json to_json() const;
};

struct RecursionInfo {
  /// Nonterminals that can reach themselves through rule bodies.
  std::set<std::string> recursive_nonterminals;
  /// Cycles reachable entirely through positions where no input is
  /// necessarily consumed first.
  std::vector<std::vector<std::string>> left_recursive_cycles;
};

RecursionInfo recursion_info(const Grammar& g);

/// A grammar is well formed when every occurrence of a recursive
/// nonterminal either sits in tail position or is followed (within its
/// enclosing sequence chain) only by capture-free expressions.
WellFormednessReport check_well_formed(const Grammar& g);

/// Throws LeftRecursionError naming a cycle; the default guard before
/// parsing, since evaluation diverges on left recursion.
void reject_left_recursion(const Grammar& g);

}  // namespace cpeg
