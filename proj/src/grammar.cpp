#include "cpeg/grammar.hpp"

#include "cpeg/errors.hpp"

namespace cpeg {

namespace {

void scan(const Expression& e, CharSet& alphabet, std::set<std::string>& labels,
          std::vector<std::string>& references) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Terminal>) {
          alphabet.add(node.chars);
        } else if constexpr (std::is_same_v<T, Nonterminal>) {
          references.push_back(node.name);
        } else if constexpr (std::is_same_v<T, Sequence> ||
                             std::is_same_v<T, Choice>) {
          scan(*node.first, alphabet, labels, references);
          scan(*node.second, alphabet, labels, references);
        } else if constexpr (std::is_same_v<T, Repetition> ||
                             std::is_same_v<T, NotPredicate>) {
          scan(*node.body, alphabet, labels, references);
        } else if constexpr (std::is_same_v<T, Capture>) {
          labels.insert(node.label);
          scan(*node.body, alphabet, labels, references);
        } else if constexpr (std::is_same_v<T, FoldCapture>) {
          labels.insert(node.label);
          scan(*node.seed, alphabet, labels, references);
          scan(*node.step, alphabet, labels, references);
        }
      },
      e.node());
}

}  // namespace

Grammar::Grammar(std::vector<std::pair<std::string, ExprPtr>> rules,
                 ExprPtr start)
    : start_(std::move(start)) {
  if (!start_) throw Error("grammar requires a start expression");
  std::vector<std::string> references;
  for (auto& [name, body] : rules) {
    if (!body) throw Error("rule '" + name + "' has no body");
    if (!rules_.emplace(name, body).second) {
      throw Error("duplicate rule '" + name + "'");
    }
    order_.push_back(name);
    scan(*body, alphabet_, labels_, references);
  }
  scan(*start_, alphabet_, labels_, references);
  for (const std::string& name : references) {
    if (!rules_.contains(name)) throw UndefinedNonterminalError(name);
  }
}

bool Grammar::has_rule(std::string_view name) const {
  return rules_.find(name) != rules_.end();
}

const ExprPtr& Grammar::rule(std::string_view name) const {
  auto it = rules_.find(name);
  if (it == rules_.end()) throw UndefinedNonterminalError(std::string(name));
  return it->second;
}

std::string render_grammar(const Grammar& g) {
  std::string out;
  for (const std::string& name : g.nonterminals()) {
    out += name;
    out += " = ";
    out += to_string(*g.rule(name));
    out += "\n";
  }
  return out;
}

}  // namespace cpeg
