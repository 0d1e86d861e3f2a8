#include "cpeg/grammar_parser.hpp"

#include <optional>
#include <utility>
#include <vector>

#include "cpeg/errors.hpp"
#include "cpeg/sugar.hpp"
#include "cpeg/unicode.hpp"

namespace cpeg {

namespace {

bool is_ident_start(char32_t c) {
  return (c >= U'A' && c <= U'Z') || (c >= U'a' && c <= U'z') || c == U'_';
}

bool is_ident_part(char32_t c) {
  return is_ident_start(c) || (c >= U'0' && c <= U'9');
}

class Parser {
public:
  explicit Parser(std::u32string text) : text_(std::move(text)) {}

  Grammar run() {
    std::vector<std::pair<std::string, SugarPtr>> rules;
    skip_trivia();
    while (!at_end()) {
      auto [line, col] = position();
      std::string name = expect_identifier("rule name");
      for (const auto& [existing, body] : rules) {
        if (existing == name) {
          throw SyntaxError("duplicate rule '" + name + "'", line, col);
        }
      }
      skip_trivia();
      expect(U'=');
      rules.emplace_back(std::move(name), parse_expression());
      skip_trivia();
    }
    if (rules.empty()) throw SyntaxError("expected a rule", 1, 1);
    for (const auto& ref : references_) {
      bool defined = false;
      for (const auto& [rule_name, body] : rules) {
        if (rule_name == ref.name) {
          defined = true;
          break;
        }
      }
      if (!defined) {
        throw SyntaxError("undefined nonterminal '" + ref.name + "'", ref.line,
                          ref.column);
      }
    }
    std::vector<std::pair<std::string, ExprPtr>> core;
    core.reserve(rules.size());
    for (const auto& [rule_name, body] : rules) {
      core.emplace_back(rule_name, desugar(body));
    }
    return Grammar(std::move(core), nonterminal(core.front().first));
  }

private:
  struct Mark {
    std::size_t pos;
    std::size_t line;
    std::size_t column;
  };

  struct Reference {
    std::string name;
    std::size_t line;
    std::size_t column;
  };

  // --- cursor -------------------------------------------------------------

  bool at_end() const { return pos_ >= text_.size(); }

  char32_t peek() const { return pos_ < text_.size() ? text_[pos_] : U'\0'; }

  char32_t peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : U'\0';
  }

  char32_t advance() {
    char32_t c = text_[pos_++];
    if (c == U'\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  Mark mark() const { return {pos_, line_, column_}; }

  void reset(const Mark& m) {
    pos_ = m.pos;
    line_ = m.line;
    column_ = m.column;
  }

  std::pair<std::size_t, std::size_t> position() const {
    return {line_, column_};
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, line_, column_);
  }

  void skip_trivia() {
    while (!at_end()) {
      char32_t c = peek();
      if (c == U' ' || c == U'\t' || c == U'\r' || c == U'\n') {
        advance();
      } else if (c == U'/' && peek(1) == U'/') {
        while (!at_end() && peek() != U'\n') advance();
      } else {
        break;
      }
    }
  }

  void expect(char32_t c) {
    if (at_end() || peek() != c) {
      fail("expected '" + utf8_encode(c) + "'");
    }
    advance();
  }

  std::string expect_identifier(const char* what) {
    if (at_end() || !is_ident_start(peek())) {
      fail(std::string("expected ") + what);
    }
    std::u32string name;
    while (!at_end() && is_ident_part(peek())) name.push_back(advance());
    return utf8_encode(name);
  }

  // --- lookahead ----------------------------------------------------------

  // A rule boundary: an identifier followed by '='.
  bool next_is_rule_start() {
    Mark m = mark();
    bool result = false;
    if (!at_end() && is_ident_start(peek())) {
      while (!at_end() && is_ident_part(peek())) advance();
      skip_trivia();
      result = !at_end() && peek() == U'=';
    }
    reset(m);
    return result;
  }

  // `(` followed by `^`, the parenthesized fold forms.
  bool at_fold_group() {
    if (peek() != U'(') return false;
    Mark m = mark();
    advance();
    skip_trivia();
    bool result = !at_end() && peek() == U'^';
    reset(m);
    return result;
  }

  bool can_start_element() {
    if (at_end()) return false;
    char32_t c = peek();
    if (c == U'\'' || c == U'[' || c == U'.' || c == U'{' || c == U'(' ||
        c == U'!' || c == U'&') {
      return true;
    }
    return is_ident_start(c) && !next_is_rule_start();
  }

  // --- expression grammar ---------------------------------------------------

  SugarPtr parse_expression() {
    SugarPtr first = parse_sequence();
    skip_trivia();
    if (!at_end() && peek() == U'/') {
      advance();
      skip_trivia();
      return s_choice(std::move(first), parse_expression());
    }
    return first;
  }

  SugarPtr parse_sequence() {
    std::vector<SugarPtr> elements;
    while (true) {
      skip_trivia();
      if (peek() == U'^' || at_fold_group()) {
        parse_fold(elements);
        continue;
      }
      if (!can_start_element()) break;
      elements.push_back(parse_prefixed());
    }
    if (elements.empty()) fail("expected expression");
    SugarPtr out = elements.back();
    for (std::size_t i = elements.size() - 1; i-- > 0;) {
      out = s_sequence(elements[i], std::move(out));
    }
    return out;
  }

  SugarPtr combine_seed(const std::vector<SugarPtr>& elements) {
    if (elements.empty()) {
      fail("fold-capture '^{...}' needs a preceding expression to fold");
    }
    SugarPtr out = elements.back();
    for (std::size_t i = elements.size() - 1; i-- > 0;) {
      out = s_sequence(elements[i], out);
    }
    return out;
  }

  // The accepted fold positions: `e ^{...}`, `e (^{...})*`, `e (^{...})?`,
  // and `e (^{...})/(^{...})`. Anything else involving '^' is an error.
  void parse_fold(std::vector<SugarPtr>& elements) {
    if (peek() == U'^') {
      auto [label, step] = parse_fold_braces();
      SugarPtr seed = combine_seed(elements);
      elements.assign(1, s_fold_single(label, std::move(seed), step));
      return;
    }
    expect(U'(');
    skip_trivia();
    auto [label, step] = parse_fold_braces();
    skip_trivia();
    expect(U')');
    skip_trivia();
    if (!at_end() && peek() == U'*') {
      advance();
      SugarPtr seed = combine_seed(elements);
      elements.assign(1, s_fold_star(label, std::move(seed), step));
      return;
    }
    if (!at_end() && peek() == U'?') {
      advance();
      SugarPtr seed = combine_seed(elements);
      elements.assign(1, s_fold_optional(label, std::move(seed), step));
      return;
    }
    if (!at_end() && peek() == U'/') {
      Mark m = mark();
      advance();
      skip_trivia();
      if (at_fold_group()) {
        advance();  // '('
        skip_trivia();
        auto [label2, step2] = parse_fold_braces();
        skip_trivia();
        expect(U')');
        SugarPtr seed = combine_seed(elements);
        elements.assign(1, s_fold_choice(label, label2, std::move(seed), step,
                                         step2));
        return;
      }
      reset(m);  // ordinary choice; handled by the caller
    }
    SugarPtr seed = combine_seed(elements);
    elements.assign(1, s_fold_single(label, std::move(seed), step));
  }

  std::pair<std::string, SugarPtr> parse_fold_braces() {
    expect(U'^');
    skip_trivia();
    expect(U'{');
    skip_trivia();
    SugarPtr body = parse_expression();
    skip_trivia();
    expect(U'#');
    std::string label = expect_identifier("label");
    skip_trivia();
    expect(U'}');
    return {std::move(label), std::move(body)};
  }

  SugarPtr parse_prefixed() {
    if (peek() == U'!') {
      advance();
      skip_trivia();
      return s_not(parse_prefixed());
    }
    if (peek() == U'&') {
      advance();
      skip_trivia();
      return s_and(parse_prefixed());
    }
    return parse_suffixed();
  }

  SugarPtr parse_suffixed() {
    SugarPtr out = parse_primary();
    while (true) {
      Mark m = mark();
      skip_trivia();
      if (!at_end() && peek() == U'*') {
        advance();
        out = s_repetition(std::move(out));
      } else if (!at_end() && peek() == U'+') {
        advance();
        out = s_one_or_more(std::move(out));
      } else if (!at_end() && peek() == U'?') {
        advance();
        out = s_optional(std::move(out));
      } else {
        reset(m);
        break;
      }
    }
    return out;
  }

  SugarPtr parse_primary() {
    if (at_end()) fail("expected expression");
    char32_t c = peek();
    if (c == U'\'') return parse_string_literal();
    if (c == U'[') return parse_char_class();
    if (c == U'.') {
      advance();
      return s_char_class(CharSet::any());
    }
    if (c == U'{') return parse_capture();
    if (c == U'(') {
      advance();
      skip_trivia();
      SugarPtr inner = parse_expression();
      skip_trivia();
      expect(U')');
      return inner;
    }
    if (is_ident_start(c)) {
      auto [line, col] = position();
      std::string name = expect_identifier("nonterminal");
      references_.push_back({name, line, col});
      return s_nonterminal(std::move(name));
    }
    fail("expected expression");
  }

  SugarPtr parse_capture() {
    expect(U'{');
    skip_trivia();
    SugarPtr body = parse_expression();
    skip_trivia();
    expect(U'#');
    std::string label = expect_identifier("label");
    skip_trivia();
    expect(U'}');
    return s_capture(std::move(label), std::move(body));
  }

  char32_t parse_escape() {
    advance();  // backslash
    if (at_end()) fail("incomplete escape sequence");
    char32_t c = advance();
    switch (c) {
      case U'n': return U'\n';
      case U't': return U'\t';
      case U'r': return U'\r';
      case U'\\': return U'\\';
      case U'\'': return U'\'';
      case U']': return U']';
      case U'-': return U'-';
    }
    fail("unknown escape '\\" + utf8_encode(c) + "'");
  }

  SugarPtr parse_string_literal() {
    expect(U'\'');
    std::u32string text;
    while (true) {
      if (at_end()) fail("unterminated string literal");
      if (peek() == U'\'') {
        advance();
        break;
      }
      if (peek() == U'\\') {
        text.push_back(parse_escape());
      } else {
        text.push_back(advance());
      }
    }
    return s_string(std::move(text));
  }

  char32_t parse_class_char() {
    if (at_end()) fail("unterminated character class");
    if (peek() == U'\\') return parse_escape();
    if (peek() == U'-') fail("escape '-' as '\\-' inside a character class");
    return advance();
  }

  SugarPtr parse_char_class() {
    expect(U'[');
    CharSet set;
    while (true) {
      if (at_end()) fail("unterminated character class");
      if (peek() == U']') {
        advance();
        break;
      }
      char32_t lo = parse_class_char();
      if (!at_end() && peek() == U'-') {
        advance();
        char32_t hi = parse_class_char();
        set.add(lo, hi);
      } else {
        set.add(lo, lo);
      }
    }
    return s_char_class(std::move(set));
  }

  std::u32string text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::vector<Reference> references_;
};

}  // namespace

Grammar parse_grammar(std::string_view text) {
  return Parser(utf8_decode(text)).run();
}

}  // namespace cpeg
