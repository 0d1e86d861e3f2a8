#include "cpeg/static_analysis.hpp"

#include <algorithm>
#include <map>

#include "cpeg/errors.hpp"

namespace cpeg {

namespace {

// --- nullability -----------------------------------------------------------

using NullableMap = std::map<std::string, bool>;

bool nullable(const Expression& e, const NullableMap& rules) {
  return std::visit(
      [&](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Empty>) {
          return true;
        } else if constexpr (std::is_same_v<T, Terminal>) {
          return false;
        } else if constexpr (std::is_same_v<T, Nonterminal>) {
          auto it = rules.find(node.name);
          return it != rules.end() && it->second;
        } else if constexpr (std::is_same_v<T, Sequence>) {
          return nullable(*node.first, rules) && nullable(*node.second, rules);
        } else if constexpr (std::is_same_v<T, Choice>) {
          return nullable(*node.first, rules) || nullable(*node.second, rules);
        } else if constexpr (std::is_same_v<T, Repetition> ||
                             std::is_same_v<T, NotPredicate>) {
          return true;
        } else if constexpr (std::is_same_v<T, Capture>) {
          return nullable(*node.body, rules);
        } else {
          static_assert(std::is_same_v<T, FoldCapture>);
          return nullable(*node.seed, rules);
        }
      },
      e.node());
}

NullableMap compute_nullable(const Grammar& g) {
  NullableMap map;
  for (const std::string& name : g.nonterminals()) map[name] = false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const std::string& name : g.nonterminals()) {
      bool value = nullable(*g.rule(name), map);
      if (value && !map[name]) {
        map[name] = true;
        changed = true;
      }
    }
  }
  return map;
}

// --- reference graphs -------------------------------------------------------

using Graph = std::map<std::string, std::vector<std::string>>;

void add_edge(Graph& graph, const std::string& from, const std::string& to) {
  auto& targets = graph[from];
  if (std::find(targets.begin(), targets.end(), to) == targets.end()) {
    targets.push_back(to);
  }
}

void collect_references(const Expression& e, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Nonterminal>) {
          out.push_back(node.name);
        } else if constexpr (std::is_same_v<T, Sequence> ||
                             std::is_same_v<T, Choice>) {
          collect_references(*node.first, out);
          collect_references(*node.second, out);
        } else if constexpr (std::is_same_v<T, Repetition> ||
                             std::is_same_v<T, NotPredicate>) {
          collect_references(*node.body, out);
        } else if constexpr (std::is_same_v<T, Capture>) {
          collect_references(*node.body, out);
        } else if constexpr (std::is_same_v<T, FoldCapture>) {
          collect_references(*node.seed, out);
          collect_references(*node.step, out);
        }
      },
      e.node());
}

// Nonterminals reachable before any input is necessarily consumed.
void collect_left_references(const Expression& e, const NullableMap& null_map,
                             std::vector<std::string>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Nonterminal>) {
          out.push_back(node.name);
        } else if constexpr (std::is_same_v<T, Sequence>) {
          collect_left_references(*node.first, null_map, out);
          if (nullable(*node.first, null_map)) {
            collect_left_references(*node.second, null_map, out);
          }
        } else if constexpr (std::is_same_v<T, Choice>) {
          collect_left_references(*node.first, null_map, out);
          collect_left_references(*node.second, null_map, out);
        } else if constexpr (std::is_same_v<T, Repetition> ||
                             std::is_same_v<T, NotPredicate> ||
                             std::is_same_v<T, Capture>) {
          collect_left_references(*node.body, null_map, out);
        } else if constexpr (std::is_same_v<T, FoldCapture>) {
          collect_left_references(*node.seed, null_map, out);
          if (nullable(*node.seed, null_map)) {
            collect_left_references(*node.step, null_map, out);
          }
        }
      },
      e.node());
}

// Tarjan's strongly connected components, in deterministic rule order.
class SccFinder {
public:
  SccFinder(const Graph& graph, const std::vector<std::string>& order)
      : graph_(graph) {
    for (const std::string& name : order) {
      if (!indices_.contains(name)) strong_connect(name);
    }
  }

  const std::vector<std::vector<std::string>>& components() const {
    return components_;
  }

private:
  void strong_connect(const std::string& v) {
    indices_[v] = lowlink_[v] = next_index_++;
    stack_.push_back(v);
    on_stack_.insert(v);
    auto it = graph_.find(v);
    if (it != graph_.end()) {
      for (const std::string& w : it->second) {
        if (!indices_.contains(w)) {
          strong_connect(w);
          lowlink_[v] = std::min(lowlink_[v], lowlink_[w]);
        } else if (on_stack_.contains(w)) {
          lowlink_[v] = std::min(lowlink_[v], indices_[w]);
        }
      }
    }
    if (lowlink_[v] == indices_[v]) {
      std::vector<std::string> component;
      while (true) {
        std::string w = stack_.back();
        stack_.pop_back();
        on_stack_.erase(w);
        component.push_back(w);
        if (w == v) break;
      }
      std::reverse(component.begin(), component.end());
      components_.push_back(std::move(component));
    }
  }

  const Graph& graph_;
  std::map<std::string, int> indices_;
  std::map<std::string, int> lowlink_;
  std::vector<std::string> stack_;
  std::set<std::string> on_stack_;
  int next_index_ = 0;
  std::vector<std::vector<std::string>> components_;
};

bool has_self_loop(const Graph& graph, const std::string& name) {
  auto it = graph.find(name);
  if (it == graph.end()) return false;
  return std::find(it->second.begin(), it->second.end(), name) !=
         it->second.end();
}

std::set<std::string> names_on_cycles(const Graph& graph,
                                      const std::vector<std::string>& order) {
  std::set<std::string> result;
  SccFinder finder(graph, order);
  for (const auto& component : finder.components()) {
    if (component.size() > 1) {
      result.insert(component.begin(), component.end());
    } else if (has_self_loop(graph, component.front())) {
      result.insert(component.front());
    }
  }
  return result;
}

// One concrete cycle per cyclic component, found by DFS within it.
std::vector<std::string> cycle_in_component(
    const Graph& graph, const std::vector<std::string>& component) {
  if (component.size() == 1) return component;
  std::set<std::string> members(component.begin(), component.end());
  const std::string& origin = component.front();
  std::vector<std::string> path{origin};
  std::set<std::string> visited{origin};
  // Walk inside the component until the origin reappears.
  std::string current = origin;
  while (true) {
    const auto& targets = graph.at(current);
    std::string next;
    for (const std::string& candidate : targets) {
      if (candidate == origin) return path;
      if (members.contains(candidate) && !visited.contains(candidate)) {
        next = candidate;
        break;
      }
    }
    if (next.empty()) return component;  // fallback; should not happen
    path.push_back(next);
    visited.insert(next);
    current = next;
  }
}

// --- well-formedness ---------------------------------------------------------

bool contains_capture(const Expression& e) {
  return std::visit(
      [](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Capture> ||
                      std::is_same_v<T, FoldCapture>) {
          return true;
        } else if constexpr (std::is_same_v<T, Sequence> ||
                             std::is_same_v<T, Choice>) {
          return contains_capture(*node.first) || contains_capture(*node.second);
        } else if constexpr (std::is_same_v<T, Repetition> ||
                             std::is_same_v<T, NotPredicate>) {
          return contains_capture(*node.body);
        } else {
          return false;
        }
      },
      e.node());
}

class WellFormednessScan {
public:
  WellFormednessScan(const std::set<std::string>& recursive,
                     std::vector<Violation>& out)
      : recursive_(recursive), out_(out) {}

  void scan_rule(const std::string& rule, const Expression& body) {
    rule_ = rule;
    visit(body, true, {}, "");
  }

private:
  // `following` lists the expressions sequenced to the right of the current
  // position, innermost first. Tail positions: the rule body; the second
  // operand of a sequence in tail position; both branches of a choice in
  // tail position. Repetition, predicate, and capture bodies and both fold
  // operands are never tail positions.
  void visit(const Expression& e, bool tail,
             std::vector<const Expression*> following,
             const std::string& path) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Nonterminal>) {
            check_occurrence(node.name, tail, following, path);
          } else if constexpr (std::is_same_v<T, Sequence>) {
            auto first_following = following;
            first_following.insert(first_following.begin(),
                                   node.second.get());
            visit(*node.first, false, std::move(first_following),
                  path + "/seq[0]");
            visit(*node.second, tail, following, path + "/seq[1]");
          } else if constexpr (std::is_same_v<T, Choice>) {
            visit(*node.first, tail, following, path + "/alt[0]");
            visit(*node.second, tail, following, path + "/alt[1]");
          } else if constexpr (std::is_same_v<T, Repetition>) {
            // Later iterations run the body again after this occurrence.
            auto body_following = following;
            body_following.insert(body_following.begin(), node.body.get());
            visit(*node.body, false, std::move(body_following), path + "/rep");
          } else if constexpr (std::is_same_v<T, NotPredicate>) {
            visit(*node.body, false, {}, path + "/not");
          } else if constexpr (std::is_same_v<T, Capture>) {
            visit(*node.body, false, {}, path + "/cap");
          } else if constexpr (std::is_same_v<T, FoldCapture>) {
            // The fold keeps wrapping results in its label after the seed,
            // so the seed is followed by capturing material; step results
            // land inside the label, like a capture body.
            auto seed_following = following;
            seed_following.insert(seed_following.begin(), &e);
            visit(*node.seed, false, std::move(seed_following),
                  path + "/fold[0]");
            visit(*node.step, false, {}, path + "/fold[1]");
          }
        },
        e.node());
  }

  void check_occurrence(const std::string& name, bool tail,
                        const std::vector<const Expression*>& following,
                        const std::string& path) {
    if (!recursive_.contains(name)) return;
    if (tail) return;
    for (const Expression* e : following) {
      if (contains_capture(*e)) {
        out_.push_back(
            {rule_, path.empty() ? "/" : path,
             "recursive nonterminal '" + name +
                 "' is not in tail position and is followed by an "
                 "expression containing a capture"});
        return;
      }
    }
  }

  const std::set<std::string>& recursive_;
  std::vector<Violation>& out_;
  std::string rule_;
};

}  // namespace

RecursionInfo recursion_info(const Grammar& g) {
  RecursionInfo info;
  const NullableMap null_map = compute_nullable(g);

  Graph full;
  Graph left;
  for (const std::string& name : g.nonterminals()) {
    std::vector<std::string> refs;
    collect_references(*g.rule(name), refs);
    for (const std::string& target : refs) add_edge(full, name, target);

    std::vector<std::string> left_refs;
    collect_left_references(*g.rule(name), null_map, left_refs);
    for (const std::string& target : left_refs) add_edge(left, name, target);
  }

  info.recursive_nonterminals = names_on_cycles(full, g.nonterminals());

  SccFinder left_sccs(left, g.nonterminals());
  for (const auto& component : left_sccs.components()) {
    if (component.size() > 1 || has_self_loop(left, component.front())) {
      info.left_recursive_cycles.push_back(cycle_in_component(left, component));
    }
  }
  return info;
}

WellFormednessReport check_well_formed(const Grammar& g) {
  WellFormednessReport report;
  const std::set<std::string> recursive =
      recursion_info(g).recursive_nonterminals;
  WellFormednessScan scan(recursive, report.violations);
  for (const std::string& name : g.nonterminals()) {
    scan.scan_rule(name, *g.rule(name));
  }
  return report;
}

void reject_left_recursion(const Grammar& g) {
  RecursionInfo info = recursion_info(g);
  if (!info.left_recursive_cycles.empty()) {
    throw LeftRecursionError(info.left_recursive_cycles.front());
  }
}

std::string WellFormednessReport::to_text() const {
  if (is_well_formed()) return "well-formed\n";
  std::string out;
  for (const Violation& v : violations) {
    out += v.rule + " at " + v.path + ": " + v.reason + "\n";
  }
  return out;
}

nlohmann::json WellFormednessReport::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const Violation& v : violations) {
    items.push_back(
        {{"rule", v.rule}, {"path", v.path}, {"reason", v.reason}});
  }
  return {{"well_formed", is_well_formed()}, {"violations", items}};
}

}  // namespace cpeg
