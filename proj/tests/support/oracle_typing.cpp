#include "oracle_typing.hpp"

#include <utility>
#include <vector>

#include "cpeg/errors.hpp"

namespace cpeg::testing {

namespace {

// Every (v1, v2) with concat(v1, v2) == v. Absorbed strings are represented
// by the empty string: whenever a non-empty phantom string would type-check,
// the empty string does too, so no derivation is missed.
std::vector<std::pair<Tree, Tree>> splits(const Tree& v) {
  std::vector<std::pair<Tree, Tree>> out;
  if (v.is_text()) {
    const std::string& s = v.text_value();
    for (std::size_t i = 0; i <= s.size(); ++i) {
      out.emplace_back(Tree::text(s.substr(0, i)), Tree::text(s.substr(i)));
    }
  } else {
    const auto& nodes = v.nodes();
    out.emplace_back(Tree(), v);
    for (std::size_t k = 1; k < nodes.size(); ++k) {
      Tree left;
      Tree right;
      for (std::size_t i = 0; i < k; ++i) {
        left = concat(std::move(left), Tree::node(nodes[i].label,
                                                  nodes[i].children));
      }
      for (std::size_t i = k; i < nodes.size(); ++i) {
        right = concat(std::move(right), Tree::node(nodes[i].label,
                                                    nodes[i].children));
      }
      out.emplace_back(std::move(left), std::move(right));
    }
    out.emplace_back(v, Tree());
  }
  return out;
}

bool is_empty_tree(const Tree& v) {
  return v.is_text() && v.text_value().empty();
}

}  // namespace

bool oracle_member(const Tree& v, const RetType& t, const GlobalSet& e,
                   int depth) {
  if (depth <= 0) throw Error("typing oracle depth exhausted");
  return std::visit(
      [&](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, REmpty>) {
          return v.is_text();
        } else if constexpr (std::is_same_v<T, RConcat>) {
          for (const auto& [left, right] : splits(v)) {
            if (oracle_member(left, *node.first, e, depth - 1) &&
                oracle_member(right, *node.second, e, depth - 1)) {
              return true;
            }
          }
          return false;
        } else if constexpr (std::is_same_v<T, RUnion>) {
          return oracle_member(v, *node.first, e, depth - 1) ||
                 oracle_member(v, *node.second, e, depth - 1);
        } else if constexpr (std::is_same_v<T, RStar>) {
          if (is_empty_tree(v)) return true;
          // Peel a non-empty first repetition; empty pieces contribute
          // nothing to the concatenation.
          for (const auto& [first, rest] : splits(v)) {
            if (is_empty_tree(first)) continue;
            if (oracle_member(first, *node.body, e, depth - 1) &&
                oracle_member(rest, t, e, depth - 1)) {
              return true;
            }
          }
          return false;
        } else if constexpr (std::is_same_v<T, RLabel>) {
          if (v.is_text() || v.nodes().size() != 1) return false;
          const TreeNode& n = v.nodes().front();
          return n.label == node.label &&
                 oracle_member(n.children, *node.body, e, depth - 1);
        } else {
          static_assert(std::is_same_v<T, RVar>);
          return oracle_member(v, *e.resolve(node.name), e, depth - 1);
        }
      },
      t.node());
}

}  // namespace cpeg::testing
