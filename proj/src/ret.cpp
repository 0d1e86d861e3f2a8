#include "cpeg/ret.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "cpeg/errors.hpp"

namespace cpeg {

namespace {

RetPtr make(RetNode node) { return std::make_shared<const RetType>(std::move(node)); }

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

RetPtr ret_empty() { return make(REmpty{}); }
RetPtr ret_concat(RetPtr first, RetPtr second) {
  return make(RConcat{std::move(first), std::move(second)});
}
RetPtr ret_union(RetPtr first, RetPtr second) {
  return make(RUnion{std::move(first), std::move(second)});
}
RetPtr ret_star(RetPtr body) { return make(RStar{std::move(body)}); }
RetPtr ret_label(std::string label, RetPtr body) {
  return make(RLabel{std::move(label), std::move(body)});
}
RetPtr ret_var(std::string name) { return make(RVar{std::move(name)}); }

bool equal(const RetType& a, const RetType& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&b](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const T& rhs = *b.get_if<T>();
        if constexpr (std::is_same_v<T, REmpty>) {
          return true;
        } else if constexpr (std::is_same_v<T, RConcat> ||
                             std::is_same_v<T, RUnion>) {
          return equal(*lhs.first, *rhs.first) && equal(*lhs.second, *rhs.second);
        } else if constexpr (std::is_same_v<T, RStar>) {
          return equal(*lhs.body, *rhs.body);
        } else if constexpr (std::is_same_v<T, RLabel>) {
          return lhs.label == rhs.label && equal(*lhs.body, *rhs.body);
        } else {
          static_assert(std::is_same_v<T, RVar>);
          return lhs.name == rhs.name;
        }
      },
      a.node());
}

// --- rendering ---------------------------------------------------------------

namespace {

// Precedence: union 0, concat 1, star/atoms 2. Right spines flatten
// (`a, b, c`; `a | b | c`); left nesting keeps parentheses so that reading
// the text back rebuilds the identical structure.
constexpr int prec_union = 0;
constexpr int prec_concat = 1;
constexpr int prec_atom = 2;

std::string render(const RetType& t, int min_prec) {
  return std::visit(
      [min_prec](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, REmpty>) {
          return "Empty";
        } else if constexpr (std::is_same_v<T, RConcat>) {
          std::string body = render(*node.first, prec_concat + 1) + ", " +
                             render(*node.second, prec_concat);
          if (prec_concat < min_prec) return "(" + body + ")";
          return body;
        } else if constexpr (std::is_same_v<T, RUnion>) {
          std::string body = render(*node.first, prec_union + 1) + " | " +
                             render(*node.second, prec_union);
          if (prec_union < min_prec) return "(" + body + ")";
          return body;
        } else if constexpr (std::is_same_v<T, RStar>) {
          return render(*node.body, prec_atom + 1) + "*";
        } else if constexpr (std::is_same_v<T, RLabel>) {
          return node.label + "[" + render(*node.body, 0) + "]";
        } else {
          static_assert(std::is_same_v<T, RVar>);
          return node.name;
        }
      },
      t.node());
}

}  // namespace

std::string to_string(const RetType& t) { return render(t, 0); }

// --- global set ----------------------------------------------------------------

void GlobalSet::define(std::string name, RetPtr body) {
  if (!is_identifier(name) || name == "Empty") {
    throw Error("invalid type variable name '" + name + "'");
  }
  if (!body) throw Error("type variable '" + name + "' has no body");
  if (!bindings_.emplace(name, std::move(body)).second) {
    throw Error("type variable '" + name + "' defined twice");
  }
  order_.push_back(std::move(name));
}

bool GlobalSet::contains(std::string_view name) const {
  return bindings_.find(name) != bindings_.end();
}

const RetPtr& GlobalSet::resolve(std::string_view name) const {
  auto it = bindings_.find(name);
  if (it == bindings_.end()) throw UnboundVariableError(std::string(name));
  return it->second;
}

// --- guardedness -----------------------------------------------------------------

namespace {

// Variables occurring outside every label body.
void top_level_vars(const RetType& t, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, RVar>) {
          out.push_back(node.name);
        } else if constexpr (std::is_same_v<T, RConcat> ||
                             std::is_same_v<T, RUnion>) {
          top_level_vars(*node.first, out);
          top_level_vars(*node.second, out);
        } else if constexpr (std::is_same_v<T, RStar>) {
          top_level_vars(*node.body, out);
        }
      },
      t.node());
}

}  // namespace

std::optional<std::vector<std::string>> unguarded_cycle(const GlobalSet& e) {
  std::map<std::string, std::vector<std::string>> graph;
  for (const std::string& name : e.names()) {
    std::vector<std::string> vars;
    top_level_vars(*e.resolve(name), vars);
    for (std::string& v : vars) {
      if (!e.contains(v)) throw UnboundVariableError(v);
      auto& targets = graph[name];
      if (std::find(targets.begin(), targets.end(), v) == targets.end()) {
        targets.push_back(std::move(v));
      }
    }
  }
  // DFS with an explicit path to report the cycle found first.
  std::set<std::string> done;
  std::vector<std::string> path;
  std::set<std::string> on_path;
  std::optional<std::vector<std::string>> found;

  auto dfs = [&](auto&& self, const std::string& name) -> bool {
    path.push_back(name);
    on_path.insert(name);
    for (const std::string& next : graph[name]) {
      if (on_path.contains(next)) {
        auto start = std::find(path.begin(), path.end(), next);
        found = std::vector<std::string>(start, path.end());
        return true;
      }
      if (!done.contains(next) && self(self, next)) return true;
    }
    on_path.erase(name);
    path.pop_back();
    done.insert(name);
    return false;
  };

  for (const std::string& name : e.names()) {
    if (!done.contains(name) && dfs(dfs, name)) break;
  }
  return found;
}

// --- string predicates -------------------------------------------------------------

namespace {

bool string_nullable_impl(const RetType& t, const GlobalSet& e,
                          std::set<const RetType*>& visiting) {
  return std::visit(
      [&](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, REmpty>) {
          return true;
        } else if constexpr (std::is_same_v<T, RConcat>) {
          return string_nullable_impl(*node.first, e, visiting) &&
                 string_nullable_impl(*node.second, e, visiting);
        } else if constexpr (std::is_same_v<T, RUnion>) {
          return string_nullable_impl(*node.first, e, visiting) ||
                 string_nullable_impl(*node.second, e, visiting);
        } else if constexpr (std::is_same_v<T, RStar>) {
          return true;
        } else if constexpr (std::is_same_v<T, RLabel>) {
          return false;
        } else {
          static_assert(std::is_same_v<T, RVar>);
          const RetPtr& body = e.resolve(node.name);
          if (!visiting.insert(body.get()).second) return false;
          bool result = string_nullable_impl(*body, e, visiting);
          visiting.erase(body.get());
          return result;
        }
      },
      t.node());
}

bool accepts_all_impl(const RetType& t, const GlobalSet& e,
                      std::set<const RetType*>& visiting) {
  return std::visit(
      [&](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, REmpty>) {
          return true;
        } else if constexpr (std::is_same_v<T, RConcat>) {
          // A string splits into two strings; one side must cover
          // arbitrary text, the other must at least admit the empty string.
          bool all_first = accepts_all_impl(*node.first, e, visiting);
          bool all_second = accepts_all_impl(*node.second, e, visiting);
          if (all_first && all_second) return true;
          if (all_first) return string_nullable(*node.second, e);
          if (all_second) return string_nullable(*node.first, e);
          return false;
        } else if constexpr (std::is_same_v<T, RUnion>) {
          return accepts_all_impl(*node.first, e, visiting) ||
                 accepts_all_impl(*node.second, e, visiting);
        } else if constexpr (std::is_same_v<T, RStar>) {
          return accepts_all_impl(*node.body, e, visiting);
        } else if constexpr (std::is_same_v<T, RLabel>) {
          return false;
        } else {
          static_assert(std::is_same_v<T, RVar>);
          const RetPtr& body = e.resolve(node.name);
          if (!visiting.insert(body.get()).second) return false;
          bool result = accepts_all_impl(*body, e, visiting);
          visiting.erase(body.get());
          return result;
        }
      },
      t.node());
}

}  // namespace

bool string_nullable(const RetType& t, const GlobalSet& e) {
  std::set<const RetType*> visiting;
  return string_nullable_impl(t, e, visiting);
}

bool accepts_all_strings(const RetType& t, const GlobalSet& e) {
  std::set<const RetType*> visiting;
  return accepts_all_impl(t, e, visiting);
}

// --- membership ----------------------------------------------------------------------

namespace {

// Matches node-sequence slices against types top-down. Memoization keys on
// (slice, type node); a re-entered in-progress entry reports false, which
// prunes non-well-founded derivation paths and guarantees termination.
// A derivation found this way is real, so true results are always cached;
// a false reached under an in-progress assumption is provisional and is
// discarded rather than cached, and the dependency propagates to the
// caller. Guarded sets never re-enter a key, so they memoize fully.
class Matcher {
public:
  Matcher(const std::vector<TreeNode>& nodes, const GlobalSet& env)
      : nodes_(nodes), env_(env) {}

  bool match(std::size_t begin, std::size_t end, const RetType& t) {
    const auto key = std::make_tuple(begin, end, &t);
    auto [it, inserted] = memo_.try_emplace(key, State::in_progress);
    if (!inserted) {
      if (it->second == State::in_progress) {
        saw_assumption_ = true;
        return false;
      }
      return it->second == State::yes;
    }
    bool outer_saw_assumption = saw_assumption_;
    saw_assumption_ = false;
    bool result = compute(begin, end, t);
    bool provisional = saw_assumption_ && !result;
    if (provisional) {
      memo_.erase(key);
    } else {
      memo_[key] = result ? State::yes : State::no;
    }
    saw_assumption_ = outer_saw_assumption || provisional;
    return result;
  }

private:
  enum class State { in_progress, yes, no };

  bool compute(std::size_t begin, std::size_t end, const RetType& t) {
    return std::visit(
        [&](const auto& node) -> bool {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, REmpty>) {
            return begin == end;
          } else if constexpr (std::is_same_v<T, RConcat>) {
            for (std::size_t k = begin; k <= end; ++k) {
              if (match(begin, k, *node.first) && match(k, end, *node.second)) {
                return true;
              }
            }
            return false;
          } else if constexpr (std::is_same_v<T, RUnion>) {
            return match(begin, end, *node.first) ||
                   match(begin, end, *node.second);
          } else if constexpr (std::is_same_v<T, RStar>) {
            if (begin == end) return true;
            // Split off a non-empty first piece; empty pieces add nothing.
            for (std::size_t k = begin + 1; k <= end; ++k) {
              if (match(begin, k, *node.body) && match(k, end, t)) return true;
            }
            return false;
          } else if constexpr (std::is_same_v<T, RLabel>) {
            if (end != begin + 1) return false;
            const TreeNode& n = nodes_[begin];
            return n.label == node.label && member(n.children, *node.body, env_);
          } else {
            static_assert(std::is_same_v<T, RVar>);
            return match(begin, end, *env_.resolve(node.name));
          }
        },
        t.node());
  }

  const std::vector<TreeNode>& nodes_;
  const GlobalSet& env_;
  std::map<std::tuple<std::size_t, std::size_t, const RetType*>, State> memo_;
  bool saw_assumption_ = false;
};

}  // namespace

bool member(const Tree& v, const RetType& t, const GlobalSet& e) {
  if (v.is_text()) {
    // Strings carry no tree structure: the empty string inhabits exactly
    // the nullable types, a non-empty string only the all-string types.
    if (v.text_value().empty()) return string_nullable(t, e);
    return accepts_all_strings(t, e);
  }
  Matcher matcher(v.nodes(), e);
  return matcher.match(0, v.nodes().size(), t);
}

// --- text and JSON forms ----------------------------------------------------------------

std::string serialize_types(const GlobalSet& e, const RetType& root) {
  std::string out;
  for (const std::string& name : e.names()) {
    out += "type " + name + " = " + to_string(*e.resolve(name)) + "\n";
  }
  out += to_string(root) + "\n";
  return out;
}

namespace {

class TypeReader {
public:
  explicit TypeReader(std::string_view text) : text_(text) {}

  TypeDocument run() {
    TypeDocument doc;
    while (true) {
      skip_spaces();
      if (at_keyword("type")) {
        pos_ += 4;
        skip_blanks();
        std::string name = read_identifier();
        skip_blanks();
        expect('=');
        RetPtr body = parse_union();
        doc.bindings.define(std::move(name), std::move(body));
        skip_line_end();
      } else {
        break;
      }
    }
    skip_spaces();
    if (pos_ >= text_.size()) fail("expected a root type");
    doc.root = parse_union();
    skip_spaces();
    if (pos_ < text_.size()) fail("trailing characters");
    return doc;
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    throw Error("type syntax error at offset " + std::to_string(pos_) + ": " +
                message);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_blanks() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  void skip_spaces() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  void skip_line_end() {
    skip_blanks();
    while (pos_ < text_.size() && (text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool at_keyword(std::string_view word) const {
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t after = pos_ + word.size();
    return after >= text_.size() ||
           (!std::isalnum(static_cast<unsigned char>(text_[after])) &&
            text_[after] != '_');
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string read_identifier() {
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
      fail("expected an identifier");
    }
    std::string out;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      out += text_[pos_++];
    }
    return out;
  }

  RetPtr parse_union() {
    RetPtr first = parse_concat();
    skip_blanks();
    if (peek() == '|') {
      ++pos_;
      skip_blanks();
      return ret_union(std::move(first), parse_union());
    }
    return first;
  }

  RetPtr parse_concat() {
    RetPtr first = parse_postfix();
    skip_blanks();
    if (peek() == ',') {
      ++pos_;
      skip_blanks();
      return ret_concat(std::move(first), parse_concat());
    }
    return first;
  }

  RetPtr parse_postfix() {
    RetPtr out = parse_atom();
    while (peek() == '*') {
      ++pos_;
      out = ret_star(std::move(out));
    }
    return out;
  }

  RetPtr parse_atom() {
    skip_blanks();
    if (peek() == '(') {
      ++pos_;
      skip_blanks();
      RetPtr inner = parse_union();
      skip_blanks();
      expect(')');
      return inner;
    }
    std::string name = read_identifier();
    skip_blanks();
    if (peek() == '[') {  // a label; "Empty" is reserved only as a bare name
      ++pos_;
      skip_blanks();
      RetPtr body = parse_union();
      skip_blanks();
      expect(']');
      return ret_label(std::move(name), std::move(body));
    }
    if (name == "Empty") return ret_empty();
    return ret_var(std::move(name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TypeDocument read_types(std::string_view text) { return TypeReader(text).run(); }

nlohmann::json type_to_json(const RetType& t) {
  return std::visit(
      [](const auto& node) -> nlohmann::json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, REmpty>) {
          return {{"kind", "empty"}};
        } else if constexpr (std::is_same_v<T, RConcat>) {
          return {{"kind", "concat"},
                  {"first", type_to_json(*node.first)},
                  {"second", type_to_json(*node.second)}};
        } else if constexpr (std::is_same_v<T, RUnion>) {
          return {{"kind", "union"},
                  {"first", type_to_json(*node.first)},
                  {"second", type_to_json(*node.second)}};
        } else if constexpr (std::is_same_v<T, RStar>) {
          return {{"kind", "star"}, {"body", type_to_json(*node.body)}};
        } else if constexpr (std::is_same_v<T, RLabel>) {
          return {{"kind", "label"},
                  {"label", node.label},
                  {"body", type_to_json(*node.body)}};
        } else {
          static_assert(std::is_same_v<T, RVar>);
          return {{"kind", "var"}, {"name", node.name}};
        }
      },
      t.node());
}

nlohmann::json types_to_json(const GlobalSet& e, const RetType& root) {
  nlohmann::json bindings = nlohmann::json::array();
  for (const std::string& name : e.names()) {
    bindings.push_back({{"name", name},
                        {"type", type_to_json(*e.resolve(name))},
                        {"rendered", to_string(*e.resolve(name))}});
  }
  return {{"root", type_to_json(root)},
          {"root_rendered", to_string(root)},
          {"bindings", bindings}};
}

}  // namespace cpeg
