#include "oracle_semantics.hpp"

#include "cpeg/errors.hpp"
#include "cpeg/unicode.hpp"

namespace cpeg::testing {

namespace {

RelOutcome ok(Tree value, std::u32string rest) {
  return {true, std::move(value), std::move(rest)};
}

RelOutcome failed(std::u32string at) { return {false, Tree(), std::move(at)}; }

void spend(long& fuel) {
  if (--fuel <= 0) throw Error("oracle fuel exhausted");
}

// Collects the right-nested fold results: either the step fails immediately
// (yielding the accumulated tree) or a step succeeds and folding continues
// with the wrapped tree.
void fold_search(const Grammar& g, const FoldCapture& fold, Tree accumulated,
                 const std::u32string& rest, long& fuel,
                 std::vector<RelOutcome>& out) {
  spend(fuel);
  for (RelOutcome& step : derive_outcomes(g, *fold.step, rest, fuel)) {
    if (!step.success) {
      out.push_back(ok(accumulated, rest));
    } else {
      fold_search(g, fold,
                  Tree::node(fold.label,
                             concat(accumulated, std::move(step.value))),
                  step.rest, fuel, out);
    }
  }
}

}  // namespace

std::vector<RelOutcome> derive_outcomes(const Grammar& g, const Expression& e,
                                        const std::u32string& input,
                                        long& fuel) {
  spend(fuel);
  return std::visit(
      [&](const auto& node) -> std::vector<RelOutcome> {
        using T = std::decay_t<decltype(node)>;
        std::vector<RelOutcome> out;
        if constexpr (std::is_same_v<T, Empty>) {
          out.push_back(ok(Tree(), input));
        } else if constexpr (std::is_same_v<T, Terminal>) {
          if (!input.empty() && node.chars.contains(input[0])) {
            out.push_back(
                ok(Tree::text(utf8_encode(input[0])), input.substr(1)));
          } else {
            out.push_back(failed(input));
          }
        } else if constexpr (std::is_same_v<T, Nonterminal>) {
          out = derive_outcomes(g, *g.rule(node.name), input, fuel);
        } else if constexpr (std::is_same_v<T, Sequence>) {
          for (RelOutcome& first : derive_outcomes(g, *node.first, input, fuel)) {
            if (!first.success) {
              out.push_back(failed(input));
              continue;
            }
            for (RelOutcome& second :
                 derive_outcomes(g, *node.second, first.rest, fuel)) {
              if (!second.success) {
                out.push_back(failed(input));
              } else {
                out.push_back(ok(concat(first.value, std::move(second.value)),
                                 std::move(second.rest)));
              }
            }
          }
        } else if constexpr (std::is_same_v<T, Choice>) {
          for (RelOutcome& first : derive_outcomes(g, *node.first, input, fuel)) {
            if (first.success) {
              out.push_back(std::move(first));
              continue;
            }
            for (RelOutcome& second :
                 derive_outcomes(g, *node.second, input, fuel)) {
              if (second.success) {
                out.push_back(std::move(second));
              } else {
                out.push_back(failed(input));
              }
            }
          }
        } else if constexpr (std::is_same_v<T, Repetition>) {
          for (RelOutcome& step : derive_outcomes(g, *node.body, input, fuel)) {
            if (!step.success) {
              out.push_back(ok(Tree(), input));
              continue;
            }
            for (RelOutcome& rest : derive_outcomes(g, e, step.rest, fuel)) {
              if (!rest.success) {
                throw Error("oracle: repetition derived a failure");
              }
              out.push_back(ok(concat(step.value, std::move(rest.value)),
                               std::move(rest.rest)));
            }
          }
        } else if constexpr (std::is_same_v<T, NotPredicate>) {
          for (const RelOutcome& body :
               derive_outcomes(g, *node.body, input, fuel)) {
            if (body.success) {
              out.push_back(failed(input));
            } else {
              out.push_back(ok(Tree(), input));
            }
          }
        } else if constexpr (std::is_same_v<T, Capture>) {
          for (RelOutcome& body : derive_outcomes(g, *node.body, input, fuel)) {
            if (!body.success) {
              out.push_back(failed(input));
            } else {
              out.push_back(ok(Tree::node(node.label, std::move(body.value)),
                               std::move(body.rest)));
            }
          }
        } else {
          static_assert(std::is_same_v<T, FoldCapture>);
          for (RelOutcome& seed : derive_outcomes(g, *node.seed, input, fuel)) {
            if (!seed.success) {
              out.push_back(failed(input));
            } else {
              fold_search(g, node, std::move(seed.value), seed.rest, fuel, out);
            }
          }
        }
        return out;
      },
      e.node());
}

RelOutcome oracle_eval(const Grammar& g, const Expression& e,
                       const std::u32string& input, long fuel) {
  std::vector<RelOutcome> outcomes = derive_outcomes(g, e, input, fuel);
  if (outcomes.size() != 1) {
    throw Error("oracle derived " + std::to_string(outcomes.size()) +
                " outcomes; the relation should be deterministic");
  }
  return outcomes.front();
}

}  // namespace cpeg::testing
