#include "cpeg/expression.hpp"

#include "cpeg/unicode.hpp"

namespace cpeg {

namespace {

ExprPtr make(ExprNode node) {
  return std::make_shared<const Expression>(std::move(node));
}

}  // namespace

ExprPtr empty() { return make(Empty{}); }

ExprPtr terminal(char32_t c) { return make(Terminal{CharSet::single(c)}); }

ExprPtr terminal(CharSet chars) { return make(Terminal{std::move(chars)}); }

ExprPtr nonterminal(std::string name) {
  return make(Nonterminal{std::move(name)});
}

ExprPtr sequence(ExprPtr first, ExprPtr second) {
  return make(Sequence{std::move(first), std::move(second)});
}

ExprPtr choice(ExprPtr first, ExprPtr second) {
  return make(Choice{std::move(first), std::move(second)});
}

ExprPtr repetition(ExprPtr body) { return make(Repetition{std::move(body)}); }

ExprPtr not_predicate(ExprPtr body) {
  return make(NotPredicate{std::move(body)});
}

ExprPtr capture(std::string label, ExprPtr body) {
  return make(Capture{std::move(label), std::move(body)});
}

ExprPtr fold_capture(std::string label, ExprPtr seed, ExprPtr step) {
  return make(FoldCapture{std::move(label), std::move(seed), std::move(step)});
}

bool equal(const Expression& a, const Expression& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&b](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const T& rhs = *b.get_if<T>();
        if constexpr (std::is_same_v<T, Empty>) {
          return true;
        } else if constexpr (std::is_same_v<T, Terminal>) {
          return lhs.chars == rhs.chars;
        } else if constexpr (std::is_same_v<T, Nonterminal>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, Sequence> ||
                             std::is_same_v<T, Choice>) {
          return equal(*lhs.first, *rhs.first) && equal(*lhs.second, *rhs.second);
        } else if constexpr (std::is_same_v<T, Repetition> ||
                             std::is_same_v<T, NotPredicate>) {
          return equal(*lhs.body, *rhs.body);
        } else if constexpr (std::is_same_v<T, Capture>) {
          return lhs.label == rhs.label && equal(*lhs.body, *rhs.body);
        } else {
          static_assert(std::is_same_v<T, FoldCapture>);
          return lhs.label == rhs.label && equal(*lhs.seed, *rhs.seed) &&
                 equal(*lhs.step, *rhs.step);
        }
      },
      a.node());
}

namespace {

// Rendering precedence: choice and fold 0, sequence 1, prefix 2, suffix 3,
// primaries 4. A fold prints as `seed (^{ step #L })*`, so it must be
// parenthesized anywhere the parser would splice extra elements into its seed.
constexpr int prec_choice = 0;
constexpr int prec_fold = 0;
constexpr int prec_seq = 1;
constexpr int prec_prefix = 2;
constexpr int prec_suffix = 3;
constexpr int prec_primary = 4;

std::string escape_char(char32_t c, bool in_class) {
  switch (c) {
    case U'\n': return "\\n";
    case U'\t': return "\\t";
    case U'\r': return "\\r";
    case U'\\': return "\\\\";
    case U'\'': return "\\'";
  }
  if (in_class && (c == U']' || c == U'-')) {
    return "\\" + utf8_encode(c);
  }
  return utf8_encode(c);
}

std::string render_terminal(const Terminal& t) {
  if (t.chars.is_any()) return ".";
  if (t.chars.is_single()) {
    return "'" + escape_char(t.chars.first(), false) + "'";
  }
  std::string out = "[";
  for (const CharSet::Range& r : t.chars.ranges()) {
    out += escape_char(r.lo, true);
    if (r.hi != r.lo) {
      out += "-";
      out += escape_char(r.hi, true);
    }
  }
  out += "]";
  return out;
}

std::string render(const Expression& e, int min_prec);

std::string parenthesize(std::string body, int prec, int min_prec) {
  if (prec < min_prec) return "(" + std::move(body) + ")";
  return body;
}

std::string render(const Expression& e, int min_prec) {
  return std::visit(
      [min_prec](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Empty>) {
          return "''";
        } else if constexpr (std::is_same_v<T, Terminal>) {
          return render_terminal(node);
        } else if constexpr (std::is_same_v<T, Nonterminal>) {
          return node.name;
        } else if constexpr (std::is_same_v<T, Sequence>) {
          std::string body = render(*node.first, prec_seq + 1) + " " +
                             render(*node.second, prec_seq);
          return parenthesize(std::move(body), prec_seq, min_prec);
        } else if constexpr (std::is_same_v<T, Choice>) {
          std::string body = render(*node.first, prec_choice + 1) + " / " +
                             render(*node.second, prec_choice);
          return parenthesize(std::move(body), prec_choice, min_prec);
        } else if constexpr (std::is_same_v<T, Repetition>) {
          std::string body = render(*node.body, prec_primary) + "*";
          return parenthesize(std::move(body), prec_suffix, min_prec);
        } else if constexpr (std::is_same_v<T, NotPredicate>) {
          std::string body = "!" + render(*node.body, prec_prefix + 1);
          return parenthesize(std::move(body), prec_prefix, min_prec);
        } else if constexpr (std::is_same_v<T, Capture>) {
          return "{ " + render(*node.body, 0) + " #" + node.label + " }";
        } else {
          static_assert(std::is_same_v<T, FoldCapture>);
          std::string body = render(*node.seed, prec_fold + 1) + " (^{ " +
                             render(*node.step, 0) + " #" + node.label +
                             " })*";
          return parenthesize(std::move(body), prec_fold, min_prec);
        }
      },
      e.node());
}

}  // namespace

std::string to_string(const Expression& e) { return render(e, 0); }

}  // namespace cpeg
