// Acceptance suite: one check per criterion, one pass/fail line each.
// Exits non-zero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cpeg/grammar_parser.hpp"
#include "cpeg/parse_engine.hpp"
#include "cpeg/ret.hpp"
#include "cpeg/static_analysis.hpp"
#include "cpeg/type_inference.hpp"
#include "cpeg/unicode.hpp"

#include "../support/corpus.hpp"
#include "../support/enumerate.hpp"
#include "../support/oracle_semantics.hpp"
#include "../support/oracle_typing.hpp"

using namespace cpeg;
using namespace cpeg::testing;

namespace {

struct Harness {
  int failures = 0;

  void run(const std::string& name, const std::function<std::string()>& body) {
    std::string detail;
    try {
      detail = body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      std::cout << "[PASS] " << name << "\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << name << " -- " << detail << "\n";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

Tree int_leaf(const char* digits) { return Tree::node("Int", Tree::text(digits)); }

// --- criterion 1: golden parses ---------------------------------------------

std::string golden_parses() {
  auto start = std::chrono::steady_clock::now();
  const std::string rules =
      "Val   = { [0-9]+ #Int }\n"
      "Prod2 = { Val '*' Val #Mul }\n"
      "ProdM = { Val ('*' Val)* #Mul }\n"
      "Prod  = { Val ('*' Prod) #Mul } / Val\n"
      "ProdL = Val (^{ '*' Val #Mul })*\n";

  struct Golden {
    const char* start;
    const char* input;
    Tree expected;
  };
  const Tree i123 = int_leaf("123");
  const Tree i45 = int_leaf("45");
  const Tree i6 = int_leaf("6");
  const std::vector<Golden> cases = {
      {"Val", "123", i123},
      {"Prod2", "123*45", Tree::node("Mul", concat(i123, i45))},
      {"ProdM", "123*45*6",
       Tree::node("Mul", concat(concat(i123, i45), i6))},
      {"Prod", "123*45*6",
       Tree::node("Mul", concat(i123, Tree::node("Mul", concat(i45, i6))))},
      {"ProdL", "123*45*6",
       Tree::node("Mul", concat(Tree::node("Mul", concat(i123, i45)), i6))},
  };

  for (const Golden& c : cases) {
    Grammar g = parse_grammar("Start = " + std::string(c.start) + "\n" + rules);
    ParseOutcome outcome = parse(g, c.input);
    if (!outcome.ok()) {
      return std::string(c.start) + "(" + c.input + ") failed to parse";
    }
    if (!(outcome.value() == c.expected)) {
      return std::string(c.start) + "(" + c.input + ") produced " +
             outcome.value().to_sexpr() + ", expected " + c.expected.to_sexpr();
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 1.0) {
    return "took " + std::to_string(elapsed) + "s (budget 1s)";
  }
  return "";
}

// --- criterion 2: golden inference ------------------------------------------

std::string golden_inference() {
  InferenceResult result = infer_grammar(parse_grammar(reference_product_grammar));

  InferenceResult expected;
  expected.root = ret_var("X1");
  expected.bindings.define("X1", ret_var("X2"));
  expected.bindings.define(
      "X2", ret_union(ret_label("Prod",
                                ret_concat(ret_var("X2"),
                                           ret_concat(ret_empty(),
                                                      ret_var("X4")))),
                      ret_var("X3")));
  expected.bindings.define("X3", ret_label("Int", ret_empty()));
  expected.bindings.define("X4", ret_label("Int", ret_empty()));
  expected.introduced = {"X1", "X2", "X3", "X4"};

  if (!alpha_equal(result, expected)) return "not alpha-equal to the expected set";
  std::string serialized = serialize_types(result.bindings, *result.root);
  if (serialized != expected_product_types) {
    return "numbering differs:\n" + serialized;
  }
  return "";
}

// --- criterion 3: well-formedness classification ------------------------------

std::string wellformedness_classification() {
  const std::vector<std::pair<const char*, bool>> cases = {
      {"A = { 'a' #L1 } A { 'b' #L2 } / 'e'\n", false},
      {"A = { 'a' #L1 } A / 'e'\n", true},
      {"A = { 'a' #L1 } A 'x' / 'e'\n", true},
      {"A = { 'a' #L1 } B 'x' / 'e'\nB = { 'b' #L2 } A / 'f'\n", true},
  };
  int index = 0;
  for (const auto& [text, expected] : cases) {
    ++index;
    bool actual = check_well_formed(parse_grammar(text)).is_well_formed();
    if (actual != expected) {
      return "grammar " + std::to_string(index) + " classified " +
             (actual ? "well-formed" : "ill-formed") + ", expected " +
             (expected ? "well-formed" : "ill-formed");
    }
  }
  return "";
}

// --- criterion 4: soundness over the corpus -----------------------------------

std::string soundness() {
  if (soundness_corpus().size() < 10) return "corpus has fewer than 10 grammars";
  std::size_t accepted_total = 0;
  std::size_t checked_total = 0;
  for (const CorpusEntry& entry : soundness_corpus()) {
    Grammar g = parse_grammar(entry.grammar);
    if (!check_well_formed(g).is_well_formed()) {
      return entry.name + " is not well formed";
    }
    InferenceResult inference = infer_grammar(g);
    ParseOptions full;
    full.full_match = true;
    for (const std::string& input : all_strings(entry.alphabet, entry.max_len)) {
      ParseOutcome outcome = parse(g, input, full);
      if (outcome.ok()) ++accepted_total;
      // Prefix successes are trees derived by the start expression too;
      // soundness covers them as well.
      ParseOutcome prefix = parse(g, input);
      if (!prefix.ok()) continue;
      ++checked_total;
      if (!member(prefix.value(), *inference.root, inference.bindings)) {
        return entry.name + ": tree for input '" + input +
               "' is not a member of the inferred type";
      }
    }
  }
  if (accepted_total < 1000) {
    return "only " + std::to_string(accepted_total) +
           " accepted inputs (need 1000)";
  }
  (void)checked_total;
  return "";
}

// --- criterion 5: inference determinism --------------------------------------

std::string inference_determinism() {
  for (const CorpusEntry& entry : soundness_corpus()) {
    Grammar first_load = parse_grammar(entry.grammar);
    InferenceResult a = infer_grammar(first_load);
    Grammar second_load = parse_grammar(entry.grammar);
    InferenceResult b = infer_grammar(second_load);
    if (serialize_types(a.bindings, *a.root) !=
        serialize_types(b.bindings, *b.root)) {
      return entry.name + ": two runs serialized differently";
    }
  }
  return "";
}

// --- criterion 6: membership oracle equivalence --------------------------------

std::string membership_oracle() {
  auto start = std::chrono::steady_clock::now();

  GlobalSet env;
  env.define("RA", ret_union(ret_label("A", ret_var("RA")), ret_empty()));
  env.define("RL", ret_union(ret_label("A", ret_empty()),
                             ret_label("B", ret_concat(ret_var("RL"),
                                                       ret_empty()))));
  env.define("RS",
             ret_union(ret_label("A", ret_concat(ret_var("RS"),
                                                 ret_label("B", ret_empty()))),
                       ret_empty()));
  if (unguarded_cycle(env)) return "test bindings are not guarded";

  const RetPtr a_empty = ret_label("A", ret_empty());
  const RetPtr b_empty = ret_label("B", ret_empty());
  const std::vector<RetPtr> types = {
      ret_empty(),
      a_empty,
      b_empty,
      ret_star(a_empty),
      ret_concat(a_empty, b_empty),
      ret_union(a_empty, b_empty),
      ret_label("A", a_empty),
      ret_label("A", ret_union(ret_empty(), b_empty)),
      ret_star(ret_union(a_empty, b_empty)),
      ret_concat(a_empty, ret_star(b_empty)),
      ret_concat(ret_star(a_empty), b_empty),
      ret_label("A", ret_star(b_empty)),
      ret_union(ret_concat(a_empty, a_empty), b_empty),
      ret_star(ret_star(a_empty)),
      ret_star(ret_concat(a_empty, b_empty)),
      ret_concat(ret_empty(), ret_empty()),
      ret_label("B", ret_concat(a_empty, a_empty)),
      ret_var("RA"),
      ret_var("RL"),
      ret_var("RS"),
      ret_concat(ret_var("RA"), b_empty),
      ret_label("A", ret_var("RA")),
  };
  if (types.size() < 20) return "fewer than 20 types";

  std::vector<Tree> trees = enumerate_trees(3, {"A", "B"}, {"", "s"});
  std::size_t disagreements = 0;
  std::string example;
  for (const Tree& tree : trees) {
    for (const RetPtr& type : types) {
      bool fast = member(tree, *type, env);
      bool slow = oracle_member(tree, *type, env);
      if (fast != slow && disagreements++ == 0) {
        example = tree.to_sexpr() + " vs " + to_string(*type) + ": member=" +
                  (fast ? "true" : "false");
      }
    }
  }
  if (disagreements > 0) {
    return std::to_string(disagreements) + " disagreements; first: " + example;
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 30.0) {
    return "took " + std::to_string(elapsed) + "s (budget 30s)";
  }
  return "";
}

// --- criterion 7: semantics oracle equivalence ----------------------------------

std::string semantics_oracle() {
  if (oracle_corpus().size() < 8) return "fewer than 8 oracle grammars";

  bool saw_deep_fold = false;
  bool saw_bare_seed = false;
  for (const CorpusEntry& entry : oracle_corpus()) {
    Grammar g = parse_grammar(entry.grammar);
    for (const std::string& input : all_strings(entry.alphabet, entry.max_len)) {
      std::u32string decoded = utf8_decode(input);
      RelOutcome expected = oracle_eval(g, *g.start(), decoded);
      ParseOutcome actual = eval(g, *g.start(), decoded, 0);
      if (actual.ok() != expected.success) {
        return entry.name + " on '" + input + "': engine " +
               (actual.ok() ? "succeeded" : "failed") + ", relation " +
               (expected.success ? "succeeded" : "failed");
      }
      if (expected.success) {
        if (!(actual.value() == expected.value)) {
          return entry.name + " on '" + input + "': trees differ: " +
                 actual.value().to_sexpr() + " vs " +
                 expected.value.to_sexpr();
        }
        if (decoded.size() - actual.end != expected.rest.size()) {
          return entry.name + " on '" + input + "': consumption differs";
        }
      }
      if (entry.name == "fold" && expected.success) {
        if (input.substr(0, 4) == "abbb") saw_deep_fold = true;
        if (input == "a") saw_bare_seed = true;
      }
    }
  }
  if (!saw_deep_fold) return "no input exercised a fold with three steps";
  if (!saw_bare_seed) return "no input exercised the zero-step fold";
  return "";
}

// --- criterion 8: desugaring differential ---------------------------------------

std::string desugaring_differential() {
  for (const DesugarPair& pair : desugar_pairs()) {
    Grammar sugared = parse_grammar(pair.sugared);
    Grammar desugared = parse_grammar(pair.desugared);
    for (const std::string& input : all_strings(pair.alphabet, 8)) {
      ParseOutcome a = parse(sugared, input);
      ParseOutcome b = parse(desugared, input);
      if (a.ok() != b.ok()) {
        return pair.name + " on '" + input + "': outcomes differ";
      }
      if (a.ok() && (!(a.value() == b.value()) || a.end != b.end)) {
        return pair.name + " on '" + input + "': results differ";
      }
    }
  }
  return "";
}

}  // namespace

int main() {
  Harness harness;
  harness.run("criterion 1: golden parses reproduce the example trees",
              golden_parses);
  harness.run("criterion 2: golden inference matches the worked derivation",
              golden_inference);
  harness.run("criterion 3: well-formedness classification",
              wellformedness_classification);
  harness.run("criterion 4: parse trees inhabit inferred types (soundness)",
              soundness);
  harness.run("criterion 5: inference is deterministic across runs",
              inference_determinism);
  harness.run("criterion 6: membership matches the derivation search",
              membership_oracle);
  harness.run("criterion 7: evaluation matches the rule search",
              semantics_oracle);
  harness.run("criterion 8: sugared and desugared grammars parse identically",
              desugaring_differential);
  if (harness.failures > 0) {
    std::cout << harness.failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
