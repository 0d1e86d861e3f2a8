#include "corpus.hpp"

namespace cpeg::testing {

const char* const reference_product_grammar =
    "Prod = Val (^{ '*' Val #Prod })*\n"
    "Val  = { [0-9] #Int }\n";

const char* const expected_product_types =
    "type X1 = X2\n"
    "type X2 = Prod[X2, Empty, X4] | X3\n"
    "type X3 = Int[Empty]\n"
    "type X4 = Int[Empty]\n"
    "X1\n";

const std::vector<CorpusEntry>& soundness_corpus() {
  static const std::vector<CorpusEntry> corpus = {
      {"val", "Val = { [0-9]+ #Int }\n", "12", 9},
      {"prod2",
       "Prod2 = { Val '*' Val #Mul }\n"
       "Val = { [0-9]+ #Int }\n",
       "1*", 8},
      {"prod_flat",
       "ProdM = { Val ('*' Val)* #Mul }\n"
       "Val = { [0-9]+ #Int }\n",
       "1*", 8},
      {"prod_right",
       "Prod = { Val ('*' Prod) #Mul } / Val\n"
       "Val = { [0-9]+ #Int }\n",
       "1*", 8},
      {"prod_fold",
       "ProdL = Val (^{ '*' Val #Mul })*\n"
       "Val = { [0-9]+ #Int }\n",
       "1*", 8},
      {"product_single_digit", reference_product_grammar, "12*", 7},
      {"tail_recursion", "A = { 'a' #L1 } A / 'c'\n", "ac", 8},
      {"terminal_after_recursion", "A = { 'a' #L1 } A 'x' / 'c'\n", "acx", 7},
      {"mutual_recursion",
       "A = { 'a' #L1 } B 'x' / 'c'\n"
       "B = { 'b' #L2 } A / 'd'\n",
       "abxcd", 5},
      {"nested_parens",
       "Pair = { '(' (Pair / { 'a'+ #A }) ')' #P }\n", "(a)", 7},
      {"optional_and_star",
       "S = { 'a'? ('b' / 'c')* #S }\n", "abc", 6},
      {"fold_with_optional_capture",
       "S = { 'a' #A } (^{ 'b' { 'c' #C }? #F })*\n", "abc", 6},
      {"capture_free_recursion", "E = 'a' E / 'b'\n", "ab", 8},
      {"choice_of_captures",
       "S = { 'x' #A } S / { 'y' #B } S / ''\n", "xy", 7},
  };
  return corpus;
}

const std::vector<CorpusEntry>& oracle_corpus() {
  static const std::vector<CorpusEntry> corpus = {
      {"single_terminal", "S = 'a'\n", "ab", 6},
      {"empty_rule", "S = ''\n", "ab", 6},
      {"seq_alt_capture",
       "S = 'a' 'b' / 'b' { 'a' #A }\n", "ab", 6},
      {"plus_capture", "S = { 'a'+ #A }\n", "ab", 6},
      {"negation", "S = !'a' 'b' / 'a' 'a'\n", "ab", 6},
      {"right_recursion", "S = 'a' S / 'b'\n", "ab", 6},
      {"fold", "S = { 'a' #A } (^{ 'b' #F })*\n", "ab", 6},
      {"star_and_predicate", "S = { 'b'* #L } 'a' / &'a' 'a'\n", "ab", 6},
      {"grouped_star", "S = ('a' / 'b' 'b')* .?\n", "ab", 6},
      {"fold_nonterminal_step",
       "S = A (^{ 'a' A #M })*\n"
       "A = { 'b'+ #B }\n",
       "ab", 6},
  };
  return corpus;
}

const std::vector<DesugarPair>& desugar_pairs() {
  static const std::vector<DesugarPair> pairs = {
      {"string_literal", "S = 'ab' 'c'\n", "S = 'a' 'b' 'c'\n", "abc"},
      {"char_class", "S = [ab] 'c'\n", "S = ('a' / 'b') 'c'\n", "abc"},
      {"one_or_more", "S = 'a'+\n", "S = 'a' 'a'*\n", "ab"},
      {"optional", "S = 'a'? 'b'\n", "S = ('a' / '') 'b'\n", "ab"},
      {"and_predicate", "S = &'a' 'a' / 'b'\n", "S = !(!'a') 'a' / 'b'\n",
       "ab"},
      {"fold_single",
       "S = { 'a' #A } ^{ 'b' { 'c' #C } #L }\n",
       "S = { { 'a' #A } 'b' { 'c' #C } #L }\n", "abc"},
      {"fold_choice",
       "S = { 'a' #A } (^{ 'b' #L })/(^{ 'c' #M })\n",
       "S = { { 'a' #A } 'b' #L } / { { 'a' #A } 'c' #M }\n", "abc"},
      {"fold_optional",
       "S = { 'a' #A } (^{ 'b' #L })?\n",
       "S = { { 'a' #A } 'b' #L } / { 'a' #A }\n", "ab"},
  };
  return pairs;
}

}  // namespace cpeg::testing
