#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace cpeg {

struct TreeNode;

/// Labeled unranked tree value, kept normalized: a value is either a string
/// (UTF-8; "" is the empty tree) or a non-empty ordered sequence of labeled
/// nodes. Adjacent strings merge and a node absorbs adjacent strings, so
/// those equations hold by representation. Immutable in practice: every
/// operation returns a fresh value.
class Tree {
public:
  Tree() : value_(std::string()) {}

  static Tree text(std::string utf8);
  /// Wraps a value in a single labeled node.
  static Tree node(std::string label, Tree children);

  bool is_text() const { return std::holds_alternative<std::string>(value_); }
  const std::string& text_value() const { return std::get<std::string>(value_); }
  const std::vector<TreeNode>& nodes() const;

  bool operator==(const Tree& other) const;

  std::string to_sexpr() const;
  nlohmann::json to_json() const;
  static Tree from_sexpr(std::string_view text);
  static Tree from_json(const nlohmann::json& j);

private:
  friend Tree concat(Tree left, Tree right);
  std::variant<std::string, std::vector<TreeNode>> value_;
};

struct TreeNode {
  std::string label;
  Tree children;

  bool operator==(const TreeNode& other) const {
    return label == other.label && children == other.children;
  }
};

/// Ordered, associative concatenation with Tree() as identity:
/// strings merge, node sequences append, and a string next to a node
/// sequence is absorbed.
Tree concat(Tree left, Tree right);

}  // namespace cpeg
