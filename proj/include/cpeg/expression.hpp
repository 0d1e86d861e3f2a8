#pragma once

#include <memory>
#include <string>
#include <variant>

#include "cpeg/charset.hpp"

namespace cpeg {

class Expression;
using ExprPtr = std::shared_ptr<const Expression>;

// The nine core constructs. Everything the frontend accepts is desugared
// into these before reaching the evaluator or the type inferencer.
struct Empty {};
struct Terminal {
  CharSet chars;  // one scalar value for a literal character, a set for a class
};
struct Nonterminal {
  std::string name;
};
struct Sequence {
  ExprPtr first;
  ExprPtr second;
};
struct Choice {
  ExprPtr first;
  ExprPtr second;
};
struct Repetition {
  ExprPtr body;
};
struct NotPredicate {
  ExprPtr body;
};
struct Capture {
  std::string label;
  ExprPtr body;
};
struct FoldCapture {
  std::string label;
  ExprPtr seed;  // parsed first, becomes the leftmost leaf of the fold
  ExprPtr step;  // repeated; each success nests the accumulated tree
};

using ExprNode = std::variant<Empty, Terminal, Nonterminal, Sequence, Choice,
                              Repetition, NotPredicate, Capture, FoldCapture>;

/// Immutable expression node; share freely across threads.
class Expression {
public:
  explicit Expression(ExprNode node) : node_(std::move(node)) {}

  const ExprNode& node() const { return node_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }

private:
  ExprNode node_;
};

ExprPtr empty();
ExprPtr terminal(char32_t c);
ExprPtr terminal(CharSet chars);
ExprPtr nonterminal(std::string name);
ExprPtr sequence(ExprPtr first, ExprPtr second);
ExprPtr choice(ExprPtr first, ExprPtr second);
ExprPtr repetition(ExprPtr body);
ExprPtr not_predicate(ExprPtr body);
ExprPtr capture(std::string label, ExprPtr body);
ExprPtr fold_capture(std::string label, ExprPtr seed, ExprPtr step);

bool equal(const Expression& a, const Expression& b);
inline bool equal(const ExprPtr& a, const ExprPtr& b) { return equal(*a, *b); }

/// Renders the concrete grammar syntax; parse_grammar reads it back.
std::string to_string(const Expression& e);

}  // namespace cpeg
