#pragma once

#include <string>
#include <vector>

namespace cpeg::testing {

/// A grammar with the alphabet and length bound its inputs are enumerated
/// over in the property suites.
struct CorpusEntry {
  std::string name;
  std::string grammar;
  std::string alphabet;
  std::size_t max_len;
};

/// Well-formed grammars (the worked product-grammar family plus extras) used by
/// the soundness and determinism criteria.
const std::vector<CorpusEntry>& soundness_corpus();

/// Small two-symbol grammars that jointly exercise every evaluation rule,
/// used for the engine-vs-relation-search equivalence criterion.
const std::vector<CorpusEntry>& oracle_corpus();

/// Sugared grammar next to its hand-desugared equivalent, for the
/// differential criterion.
struct DesugarPair {
  std::string name;
  std::string sugared;
  std::string desugared;
  std::string alphabet;
};

const std::vector<DesugarPair>& desugar_pairs();

/// The running-example grammar whose inferred types are the golden
/// inference fixture.
extern const char* const reference_product_grammar;
extern const char* const expected_product_types;

}  // namespace cpeg::testing
