#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpeg/grammar.hpp"
#include "cpeg/ret.hpp"
#include "cpeg/static_analysis.hpp"

namespace cpeg {

/// Maps in-scope nonterminals to their type variables. Entries live for the
/// subderivation of the nonterminal's rule body and are dropped on exit.
class TypeEnv {
public:
  TypeEnv() = default;

  TypeEnv with(const std::string& nonterminal, const std::string& var) const {
    TypeEnv extended = *this;
    extended.entries_[nonterminal] = var;
    return extended;
  }

  const std::string* lookup(const std::string& nonterminal) const {
    auto it = entries_.find(nonterminal);
    return it == entries_.end() ? nullptr : &it->second;
  }

private:
  std::map<std::string, std::string> entries_;
};

/// Issues X1, X2, X3, ... in allocation order; never reuses a name, which
/// discharges every freshness side-condition of the typing rules.
class FreshSupply {
public:
  std::string fresh() { return "X" + std::to_string(next_++); }
  std::size_t issued() const { return next_ - 1; }

private:
  std::size_t next_ = 1;
};

struct InferenceResult {
  RetPtr root;
  GlobalSet bindings;
  /// Variables introduced by this derivation, in allocation order;
  /// equals the domain of bindings.
  std::vector<std::string> introduced;
  /// Filled when the bindings fail the guardedness check. Expected only
  /// when inference was forced on a grammar that is not well formed.
  std::optional<std::vector<std::string>> unguarded;
};

/// Runs the typing rules on one expression under an environment, drawing
/// fresh variables from the supply.
InferenceResult infer_expression(const Grammar& g, const Expression& e,
                                 const TypeEnv& env, FreshSupply& supply);

struct InferOptions {
  /// Infer even when the grammar is not well formed (the result may then
  /// carry an unguarded-cycle diagnostic).
  bool force = false;
  /// Merge structurally identical bindings for display.
  bool dedup = false;
};

/// Infers the type of the start expression with variables numbered in
/// pre-order. Refuses grammars that are not well formed unless forced;
/// the refusal is a WellFormednessError carrying the report text.
InferenceResult infer_grammar(const Grammar& g, const InferOptions& options = {});

/// True when a bijective renaming of type variables makes the root types
/// and binding sets of the two results identical.
bool alpha_equal(const InferenceResult& a, const InferenceResult& b);

/// Display simplification: repeatedly merges bindings with structurally
/// equal bodies, rewriting references to the surviving name.
InferenceResult dedup_bindings(const InferenceResult& result);

}  // namespace cpeg
