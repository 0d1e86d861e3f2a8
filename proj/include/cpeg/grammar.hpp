#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpeg/expression.hpp"

namespace cpeg {

/// A grammar is a rule map (each nonterminal defined exactly once), a start
/// expression, and the inferred terminal alphabet and label set. Immutable
/// after construction; safe to share across concurrent parses.
class Grammar {
public:
  /// Validates that every referenced nonterminal is defined and that no
  /// name is defined twice. Throws UndefinedNonterminalError / Error.
  Grammar(std::vector<std::pair<std::string, ExprPtr>> rules, ExprPtr start);

  const std::vector<std::string>& nonterminals() const { return order_; }
  bool has_rule(std::string_view name) const;

  /// P_G as a function; throws UndefinedNonterminalError for unknown names.
  const ExprPtr& rule(std::string_view name) const;

  const ExprPtr& start() const { return start_; }
  const CharSet& alphabet() const { return alphabet_; }
  const std::set<std::string>& labels() const { return labels_; }

private:
  std::vector<std::string> order_;
  std::map<std::string, ExprPtr, std::less<>> rules_;
  ExprPtr start_;
  CharSet alphabet_;
  std::set<std::string> labels_;
};

/// Renders the grammar in the concrete file syntax; parse_grammar reads
/// the result back into a structurally equal grammar.
std::string render_grammar(const Grammar& g);

}  // namespace cpeg
