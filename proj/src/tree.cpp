#include "cpeg/tree.hpp"

#include "cpeg/errors.hpp"

namespace cpeg {

Tree Tree::text(std::string utf8) {
  Tree t;
  t.value_ = std::move(utf8);
  return t;
}

Tree Tree::node(std::string label, Tree children) {
  Tree t;
  t.value_ = std::vector<TreeNode>{{std::move(label), std::move(children)}};
  return t;
}

const std::vector<TreeNode>& Tree::nodes() const {
  return std::get<std::vector<TreeNode>>(value_);
}

bool Tree::operator==(const Tree& other) const { return value_ == other.value_; }

Tree concat(Tree left, Tree right) {
  if (left.is_text() && right.is_text()) {
    return Tree::text(left.text_value() + right.text_value());
  }
  if (left.is_text()) return right;   // x, L[v] = L[v]
  if (right.is_text()) return left;   // L[v], x = L[v]
  auto merged = std::get<std::vector<TreeNode>>(std::move(left.value_));
  auto& tail = std::get<std::vector<TreeNode>>(right.value_);
  merged.insert(merged.end(), std::make_move_iterator(tail.begin()),
                std::make_move_iterator(tail.end()));
  Tree out;
  out.value_ = std::move(merged);
  return out;
}

namespace {

std::string quote(const std::string& text) {
  std::string out = "'";
  for (char c : text) {
    switch (c) {
      case '\'': out += "\\'"; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  out += "'";
  return out;
}

void render_node(const TreeNode& node, std::string& out) {
  out += "#";
  out += node.label;
  out += "[";
  if (node.children.is_text()) {
    if (!node.children.text_value().empty()) {
      out += quote(node.children.text_value());
    }
  } else {
    bool first = true;
    for (const TreeNode& child : node.children.nodes()) {
      if (!first) out += " ";
      first = false;
      render_node(child, out);
    }
  }
  out += "]";
}

class SexprReader {
public:
  explicit SexprReader(std::string_view text) : text_(text) {}

  Tree run() {
    Tree out = parse_items();
    skip_spaces();
    if (pos_ < text_.size()) fail("trailing characters");
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    throw Error("tree syntax error at offset " + std::to_string(pos_) + ": " +
                message);
  }

  void skip_spaces() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  Tree parse_items() {
    Tree out;
    bool saw_item = false;
    while (true) {
      skip_spaces();
      if (peek() == '#') {
        out = concat(std::move(out), parse_node());
        saw_item = true;
      } else if (peek() == '\'') {
        out = concat(std::move(out), Tree::text(parse_string()));
        saw_item = true;
      } else {
        break;
      }
    }
    (void)saw_item;  // zero items denote the empty string
    return out;
  }

  Tree parse_node() {
    ++pos_;  // '#'
    std::string label;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      label += text_[pos_++];
    }
    if (label.empty()) fail("expected label after '#'");
    if (peek() != '[') fail("expected '['");
    ++pos_;
    Tree children = parse_items();
    skip_spaces();
    if (peek() != ']') fail("expected ']'");
    ++pos_;
    return Tree::node(std::move(label), std::move(children));
  }

  std::string parse_string() {
    ++pos_;  // opening quote
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated string");
      char c = text_[pos_++];
      if (c == '\'') break;
      if (c == '\\') {
        if (pos_ >= text_.size()) fail("incomplete escape");
        char e = text_[pos_++];
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          case '\\': out += '\\'; break;
          case '\'': out += '\''; break;
          default: fail("unknown escape");
        }
      } else {
        out += c;
      }
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

nlohmann::json node_to_json(const TreeNode& node) {
  nlohmann::json children = nlohmann::json::array();
  if (node.children.is_text()) {
    if (!node.children.text_value().empty()) {
      children.push_back(node.children.text_value());
    }
  } else {
    for (const TreeNode& child : node.children.nodes()) {
      children.push_back(node_to_json(child));
    }
  }
  return nlohmann::json{{"label", node.label}, {"children", children}};
}

TreeNode node_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("label") || !j.contains("children")) {
    throw Error("tree JSON node requires 'label' and 'children'");
  }
  Tree children;
  for (const auto& item : j.at("children")) {
    if (item.is_string()) {
      children = concat(std::move(children), Tree::text(item.get<std::string>()));
    } else {
      TreeNode child = node_from_json(item);
      children = concat(std::move(children),
                        Tree::node(std::move(child.label),
                                   std::move(child.children)));
    }
  }
  return {j.at("label").get<std::string>(), std::move(children)};
}

}  // namespace

std::string Tree::to_sexpr() const {
  if (is_text()) return quote(text_value());
  std::string out;
  bool first = true;
  for (const TreeNode& node : nodes()) {
    if (!first) out += " ";
    first = false;
    render_node(node, out);
  }
  return out;
}

Tree Tree::from_sexpr(std::string_view text) { return SexprReader(text).run(); }

nlohmann::json Tree::to_json() const {
  if (is_text()) return text_value();
  if (nodes().size() == 1) return node_to_json(nodes().front());
  nlohmann::json out = nlohmann::json::array();
  for (const TreeNode& node : nodes()) out.push_back(node_to_json(node));
  return out;
}

Tree Tree::from_json(const nlohmann::json& j) {
  if (j.is_string()) return Tree::text(j.get<std::string>());
  if (j.is_object()) {
    TreeNode node = node_from_json(j);
    return Tree::node(std::move(node.label), std::move(node.children));
  }
  if (j.is_array()) {
    Tree out;
    for (const auto& item : j) {
      TreeNode node = node_from_json(item);
      out = concat(std::move(out),
                   Tree::node(std::move(node.label), std::move(node.children)));
    }
    return out;
  }
  throw Error("tree JSON must be a string, object, or array");
}

}  // namespace cpeg
