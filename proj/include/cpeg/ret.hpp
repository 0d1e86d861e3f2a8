#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cpeg/tree.hpp"

namespace cpeg {

class RetType;
using RetPtr = std::shared_ptr<const RetType>;

struct REmpty {};  // the empty sequence; every plain string inhabits it
struct RConcat {
  RetPtr first;
  RetPtr second;
};
struct RUnion {
  RetPtr first;
  RetPtr second;
};
struct RStar {
  RetPtr body;
};
struct RLabel {
  std::string label;
  RetPtr body;  // n-ary label bodies are concat chains
};
struct RVar {
  std::string name;
};

using RetNode = std::variant<REmpty, RConcat, RUnion, RStar, RLabel, RVar>;

/// Regular expression type over labeled unranked trees. Immutable.
class RetType {
public:
  explicit RetType(RetNode node) : node_(std::move(node)) {}
  const RetNode& node() const { return node_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }

private:
  RetNode node_;
};

RetPtr ret_empty();
RetPtr ret_concat(RetPtr first, RetPtr second);
RetPtr ret_union(RetPtr first, RetPtr second);
RetPtr ret_star(RetPtr body);
RetPtr ret_label(std::string label, RetPtr body);
RetPtr ret_var(std::string name);

bool equal(const RetType& a, const RetType& b);
inline bool equal(const RetPtr& a, const RetPtr& b) { return equal(*a, *b); }

/// Renders `T1,T2` / `T1 | T2` / `T*` / `L[...]` / variables, with label
/// bodies flattened to comma-separated argument lists.
std::string to_string(const RetType& t);

/// The single global set of `type X = T` bindings, in definition order.
class GlobalSet {
public:
  /// Defines a variable; throws Error on redefinition or a reserved name.
  void define(std::string name, RetPtr body);

  bool contains(std::string_view name) const;
  /// Single-step lookup of a binding body; throws UnboundVariableError.
  const RetPtr& resolve(std::string_view name) const;

  const std::vector<std::string>& names() const { return order_; }
  std::size_t size() const { return order_.size(); }

private:
  std::vector<std::string> order_;
  std::map<std::string, RetPtr, std::less<>> bindings_;
};

/// Returns a cycle of variables reachable from themselves through
/// union/concat/star/variable positions only (never entering a label
/// body), or nullopt when every recursive cycle is label-guarded.
std::optional<std::vector<std::string>> unguarded_cycle(const GlobalSet& e);

/// Whether the type admits some plain string (equivalently, the empty
/// string): true for Empty and Star, both sides for Concat, either side
/// for Union, false for Label, recursing through variables.
bool string_nullable(const RetType& t, const GlobalSet& e);

/// Whether the type admits every plain string. Strings inhabit types only
/// through the rule typing any string against Empty, so a type admits
/// either no string, only the empty string, or all of them.
bool accepts_all_strings(const RetType& t, const GlobalSet& e);

/// Tree-membership per the typing rules: strings reduce to the string
/// predicates above; node sequences are matched as regular expressions
/// over node atoms, with per-query memoization.
bool member(const Tree& v, const RetType& t, const GlobalSet& e);
inline bool member(const Tree& v, const RetPtr& t, const GlobalSet& e) {
  return member(v, *t, e);
}

/// One `type X = ...` line per binding followed by the root type on its
/// own line; read_types parses it back.
std::string serialize_types(const GlobalSet& e, const RetType& root);

struct TypeDocument {
  GlobalSet bindings;
  RetPtr root;
};

TypeDocument read_types(std::string_view text);

nlohmann::json type_to_json(const RetType& t);
nlohmann::json types_to_json(const GlobalSet& e, const RetType& root);

}  // namespace cpeg
