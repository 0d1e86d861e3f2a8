#include "enumerate.hpp"

namespace cpeg::testing {

std::vector<std::string> all_strings(std::string_view alphabet,
                                     std::size_t max_len) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : alphabet) out.push_back(out[i] + c);
    }
    begin = end;
  }
  return out;
}

namespace {

using NodeList = std::vector<TreeNode>;

// Single nodes carrying exactly `size` nodes in total.
std::vector<TreeNode> nodes_of_size(int size,
                                    const std::vector<std::string>& labels,
                                    const std::vector<Tree>* trees_by_size);

// Non-empty node sequences carrying exactly `size` nodes in total.
std::vector<NodeList> hedges_of_size(int size,
                                     const std::vector<std::string>& labels,
                                     const std::vector<Tree>* trees_by_size) {
  std::vector<NodeList> out;
  for (int first = 1; first <= size; ++first) {
    for (const TreeNode& head : nodes_of_size(first, labels, trees_by_size)) {
      if (first == size) {
        out.push_back({head});
      } else {
        for (const NodeList& tail :
             hedges_of_size(size - first, labels, trees_by_size)) {
          NodeList combined{head};
          combined.insert(combined.end(), tail.begin(), tail.end());
          out.push_back(std::move(combined));
        }
      }
    }
  }
  return out;
}

std::vector<TreeNode> nodes_of_size(int size,
                                    const std::vector<std::string>& labels,
                                    const std::vector<Tree>* trees_by_size) {
  std::vector<TreeNode> out;
  for (const std::string& label : labels) {
    for (const Tree& children : trees_by_size[size - 1]) {
      out.push_back({label, children});
    }
  }
  return out;
}

}  // namespace

std::vector<Tree> enumerate_trees(int max_nodes,
                                  const std::vector<std::string>& labels,
                                  const std::vector<std::string>& leaf_strings) {
  // trees_by_size[k] holds all trees with exactly k nodes.
  std::vector<std::vector<Tree>> trees_by_size(
      static_cast<std::size_t>(max_nodes) + 1);
  for (const std::string& s : leaf_strings) {
    trees_by_size[0].push_back(Tree::text(s));
  }
  for (int size = 1; size <= max_nodes; ++size) {
    for (const NodeList& hedge :
         hedges_of_size(size, labels, trees_by_size.data())) {
      Tree tree;
      for (const TreeNode& node : hedge) {
        tree = concat(std::move(tree), Tree::node(node.label, node.children));
      }
      trees_by_size[static_cast<std::size_t>(size)].push_back(std::move(tree));
    }
  }
  std::vector<Tree> out;
  for (const auto& bucket : trees_by_size) {
    out.insert(out.end(), bucket.begin(), bucket.end());
  }
  return out;
}

}  // namespace cpeg::testing
