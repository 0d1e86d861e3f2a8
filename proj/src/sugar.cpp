#include "cpeg/sugar.hpp"

namespace cpeg {

namespace {

SugarPtr make(SugarNode node) {
  return std::make_shared<const SugarExpr>(std::move(node));
}

}  // namespace

SugarPtr s_empty() { return make(SEmpty{}); }
SugarPtr s_terminal(char32_t c) { return make(STerminal{CharSet::single(c)}); }
SugarPtr s_terminal(CharSet chars) { return make(STerminal{std::move(chars)}); }
SugarPtr s_nonterminal(std::string name) {
  return make(SNonterminal{std::move(name)});
}
SugarPtr s_sequence(SugarPtr first, SugarPtr second) {
  return make(SSequence{std::move(first), std::move(second)});
}
SugarPtr s_choice(SugarPtr first, SugarPtr second) {
  return make(SChoice{std::move(first), std::move(second)});
}
SugarPtr s_repetition(SugarPtr body) {
  return make(SRepetition{std::move(body)});
}
SugarPtr s_not(SugarPtr body) { return make(SNotPredicate{std::move(body)}); }
SugarPtr s_capture(std::string label, SugarPtr body) {
  return make(SCapture{std::move(label), std::move(body)});
}
SugarPtr s_fold_star(std::string label, SugarPtr seed, SugarPtr step) {
  return make(SFoldStar{std::move(label), std::move(seed), std::move(step)});
}
SugarPtr s_string(std::u32string text) {
  return make(SStringLiteral{std::move(text)});
}
SugarPtr s_char_class(CharSet chars) {
  return make(SCharClass{std::move(chars)});
}
SugarPtr s_one_or_more(SugarPtr body) {
  return make(SOneOrMore{std::move(body)});
}
SugarPtr s_optional(SugarPtr body) { return make(SOptional{std::move(body)}); }
SugarPtr s_and(SugarPtr body) { return make(SAndPredicate{std::move(body)}); }
SugarPtr s_fold_single(std::string label, SugarPtr seed, SugarPtr step) {
  return make(SFoldSingle{std::move(label), std::move(seed), std::move(step)});
}
SugarPtr s_fold_optional(std::string label, SugarPtr seed, SugarPtr step) {
  return make(
      SFoldOptional{std::move(label), std::move(seed), std::move(step)});
}
SugarPtr s_fold_choice(std::string first_label, std::string second_label,
                       SugarPtr seed, SugarPtr first_step,
                       SugarPtr second_step) {
  return make(SFoldChoice{std::move(first_label), std::move(second_label),
                          std::move(seed), std::move(first_step),
                          std::move(second_step)});
}

ExprPtr desugar(const SugarExpr& e) {
  return std::visit(
      [](const auto& node) -> ExprPtr {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, SEmpty>) {
          return empty();
        } else if constexpr (std::is_same_v<T, STerminal>) {
          return terminal(node.chars);
        } else if constexpr (std::is_same_v<T, SNonterminal>) {
          return nonterminal(node.name);
        } else if constexpr (std::is_same_v<T, SSequence>) {
          return sequence(desugar(*node.first), desugar(*node.second));
        } else if constexpr (std::is_same_v<T, SChoice>) {
          return choice(desugar(*node.first), desugar(*node.second));
        } else if constexpr (std::is_same_v<T, SRepetition>) {
          return repetition(desugar(*node.body));
        } else if constexpr (std::is_same_v<T, SNotPredicate>) {
          return not_predicate(desugar(*node.body));
        } else if constexpr (std::is_same_v<T, SCapture>) {
          return capture(node.label, desugar(*node.body));
        } else if constexpr (std::is_same_v<T, SFoldStar>) {
          return fold_capture(node.label, desugar(*node.seed),
                              desugar(*node.step));
        } else if constexpr (std::is_same_v<T, SStringLiteral>) {
          if (node.text.empty()) return empty();
          ExprPtr out = terminal(node.text.back());
          for (std::size_t i = node.text.size() - 1; i-- > 0;) {
            out = sequence(terminal(node.text[i]), std::move(out));
          }
          return out;
        } else if constexpr (std::is_same_v<T, SCharClass>) {
          return terminal(node.chars);
        } else if constexpr (std::is_same_v<T, SOneOrMore>) {
          ExprPtr body = desugar(*node.body);
          return sequence(body, repetition(body));
        } else if constexpr (std::is_same_v<T, SOptional>) {
          return choice(desugar(*node.body), empty());
        } else if constexpr (std::is_same_v<T, SAndPredicate>) {
          return not_predicate(not_predicate(desugar(*node.body)));
        } else if constexpr (std::is_same_v<T, SFoldSingle>) {
          return capture(node.label, sequence(desugar(*node.seed),
                                              desugar(*node.step)));
        } else if constexpr (std::is_same_v<T, SFoldOptional>) {
          ExprPtr seed = desugar(*node.seed);
          return choice(capture(node.label,
                                sequence(seed, desugar(*node.step))),
                        seed);
        } else {
          static_assert(std::is_same_v<T, SFoldChoice>);
          ExprPtr seed = desugar(*node.seed);
          return choice(
              capture(node.first_label,
                      sequence(seed, desugar(*node.first_step))),
              capture(node.second_label,
                      sequence(seed, desugar(*node.second_step))));
        }
      },
      e.node());
}

SugarPtr to_sugar(const Expression& e) {
  return std::visit(
      [](const auto& node) -> SugarPtr {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Empty>) {
          return s_empty();
        } else if constexpr (std::is_same_v<T, Terminal>) {
          return s_terminal(node.chars);
        } else if constexpr (std::is_same_v<T, Nonterminal>) {
          return s_nonterminal(node.name);
        } else if constexpr (std::is_same_v<T, Sequence>) {
          return s_sequence(to_sugar(*node.first), to_sugar(*node.second));
        } else if constexpr (std::is_same_v<T, Choice>) {
          return s_choice(to_sugar(*node.first), to_sugar(*node.second));
        } else if constexpr (std::is_same_v<T, Repetition>) {
          return s_repetition(to_sugar(*node.body));
        } else if constexpr (std::is_same_v<T, NotPredicate>) {
          return s_not(to_sugar(*node.body));
        } else if constexpr (std::is_same_v<T, Capture>) {
          return s_capture(node.label, to_sugar(*node.body));
        } else {
          static_assert(std::is_same_v<T, FoldCapture>);
          return s_fold_star(node.label, to_sugar(*node.seed),
                             to_sugar(*node.step));
        }
      },
      e.node());
}

}  // namespace cpeg
