#include <random>

#include "doctest.h"

#include "cpeg/errors.hpp"
#include "cpeg/grammar_parser.hpp"
#include "cpeg/parse_engine.hpp"
#include "cpeg/static_analysis.hpp"
#include "cpeg/type_inference.hpp"

#include "../support/enumerate.hpp"

using namespace cpeg;
using namespace cpeg::testing;

namespace {

// Random grammars over two terminals, two labels, and a fixed nonterminal
// pool. References stay within the pool so every grammar is wellformed
// structurally; the semantic filters run afterwards.
class GrammarFuzzer {
public:
  explicit GrammarFuzzer(std::uint32_t seed) : rng_(seed) {}

  Grammar next() {
    std::vector<std::pair<std::string, ExprPtr>> rules;
    rules.emplace_back("R0", expr(3, 2));
    rules.emplace_back("R1", expr(3, 2));
    return Grammar(std::move(rules), nonterminal("R0"));
  }

private:
  ExprPtr expr(int depth, int fold_budget) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 11);
    switch (pick(rng_)) {
      case 0: return empty();
      case 1: return terminal(U'a');
      case 2: return terminal(U'b');
      case 3: return nonterminal(rng_() % 2 ? "R0" : "R1");
      case 4: return sequence(expr(depth - 1, fold_budget),
                              expr(depth - 1, fold_budget));
      case 5: return choice(expr(depth - 1, fold_budget),
                            expr(depth - 1, fold_budget));
      case 6: return repetition(expr(depth - 1, fold_budget));
      case 7: return not_predicate(expr(depth - 1, 0));
      case 8:
      case 9: return capture(rng_() % 2 ? "L" : "M", expr(depth - 1, fold_budget));
      case 10:
        if (fold_budget > 0) {
          return fold_capture(rng_() % 2 ? "L" : "M",
                              expr(depth - 1, fold_budget - 1),
                              expr(depth - 1, fold_budget - 1));
        }
        [[fallthrough]];
      default:
        return sequence(terminal(U'a'), expr(depth - 1, fold_budget));
    }
  }

  std::mt19937 rng_;
};

}  // namespace

TEST_CASE("random well-formed grammars never produce ill-typed trees") {
  GrammarFuzzer fuzzer(0xC0FFEE);
  const std::vector<std::string> inputs = all_strings("ab", 5);

  int usable = 0;
  int successes = 0;
  for (int attempt = 0; attempt < 400; ++attempt) {
    Grammar g = fuzzer.next();
    if (!recursion_info(g).left_recursive_cycles.empty()) continue;
    if (!check_well_formed(g).is_well_formed()) continue;
    ++usable;

    InferenceResult inference = infer_grammar(g);
    for (const std::string& input : inputs) {
      ParseOutcome outcome;
      try {
        outcome = parse(g, input);
      } catch (const DepthLimitError&) {
        continue;  // pathological non-consuming recursion; not a soundness case
      }
      if (!outcome.ok()) continue;
      ++successes;
      CAPTURE(render_grammar(g));
      CAPTURE(input);
      REQUIRE(member(outcome.value(), *inference.root, inference.bindings));
    }
  }
  // The generator must actually exercise the property.
  CHECK(usable > 100);
  CHECK(successes > 1000);
}
