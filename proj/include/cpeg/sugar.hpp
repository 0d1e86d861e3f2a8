#pragma once

#include <memory>
#include <string>
#include <variant>

#include "cpeg/expression.hpp"

namespace cpeg {

class SugarExpr;
using SugarPtr = std::shared_ptr<const SugarExpr>;

// Frontend-only constructs. The core constructs are mirrored so that a
// desugared expression is itself representable, which makes desugaring
// idempotent.
struct SEmpty {};
struct STerminal {
  CharSet chars;
};
struct SNonterminal {
  std::string name;
};
struct SSequence {
  SugarPtr first;
  SugarPtr second;
};
struct SChoice {
  SugarPtr first;
  SugarPtr second;
};
struct SRepetition {
  SugarPtr body;
};
struct SNotPredicate {
  SugarPtr body;
};
struct SCapture {
  std::string label;
  SugarPtr body;
};
struct SFoldStar {  // e1 (^{ e2 #L })*, maps to the core fold-capture
  std::string label;
  SugarPtr seed;
  SugarPtr step;
};

struct SStringLiteral {
  std::u32string text;
};
struct SCharClass {
  CharSet chars;
};
struct SOneOrMore {
  SugarPtr body;
};
struct SOptional {
  SugarPtr body;
};
struct SAndPredicate {
  SugarPtr body;
};
struct SFoldSingle {  // e1 ^{ e2 #L }
  std::string label;
  SugarPtr seed;
  SugarPtr step;
};
struct SFoldOptional {  // e1 (^{ e2 #L })?
  std::string label;
  SugarPtr seed;
  SugarPtr step;
};
struct SFoldChoice {  // e1 (^{ e2 #L })/(^{ e3 #L' })
  std::string first_label;
  std::string second_label;
  SugarPtr seed;
  SugarPtr first_step;
  SugarPtr second_step;
};

using SugarNode =
    std::variant<SEmpty, STerminal, SNonterminal, SSequence, SChoice,
                 SRepetition, SNotPredicate, SCapture, SFoldStar,
                 SStringLiteral, SCharClass, SOneOrMore, SOptional,
                 SAndPredicate, SFoldSingle, SFoldOptional, SFoldChoice>;

class SugarExpr {
public:
  explicit SugarExpr(SugarNode node) : node_(std::move(node)) {}
  const SugarNode& node() const { return node_; }

private:
  SugarNode node_;
};

SugarPtr s_empty();
SugarPtr s_terminal(char32_t c);
SugarPtr s_terminal(CharSet chars);
SugarPtr s_nonterminal(std::string name);
SugarPtr s_sequence(SugarPtr first, SugarPtr second);
SugarPtr s_choice(SugarPtr first, SugarPtr second);
SugarPtr s_repetition(SugarPtr body);
SugarPtr s_not(SugarPtr body);
SugarPtr s_capture(std::string label, SugarPtr body);
SugarPtr s_fold_star(std::string label, SugarPtr seed, SugarPtr step);
SugarPtr s_string(std::u32string text);
SugarPtr s_char_class(CharSet chars);
SugarPtr s_one_or_more(SugarPtr body);
SugarPtr s_optional(SugarPtr body);
SugarPtr s_and(SugarPtr body);
SugarPtr s_fold_single(std::string label, SugarPtr seed, SugarPtr step);
SugarPtr s_fold_optional(std::string label, SugarPtr seed, SugarPtr step);
SugarPtr s_fold_choice(std::string first_label, std::string second_label,
                       SugarPtr seed, SugarPtr first_step,
                       SugarPtr second_step);

/// Rewrites every sugared construct into the nine core constructs:
/// 'abc' -> 'a' 'b' 'c'; e+ -> e e*; e? -> e / ''; &e -> !(!e);
/// the fold forms expand to captures, except the repetitive fold,
/// which is the core primitive. Total; never fails.
ExprPtr desugar(const SugarExpr& e);
inline ExprPtr desugar(const SugarPtr& e) { return desugar(*e); }

/// Embeds a core expression into the frontend representation.
SugarPtr to_sugar(const Expression& e);

}  // namespace cpeg
