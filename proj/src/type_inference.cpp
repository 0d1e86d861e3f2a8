#include "cpeg/type_inference.hpp"

#include <algorithm>
#include <set>

#include "cpeg/errors.hpp"

namespace cpeg {

namespace {

void check_disjoint(const std::vector<std::string>& a,
                    const std::vector<std::string>& b) {
  for (const std::string& name : a) {
    if (std::find(b.begin(), b.end(), name) != b.end()) {
      throw Error("internal: type variable '" + name +
                  "' introduced twice in sibling derivations");
    }
  }
}

std::vector<std::string> merge_introduced(std::vector<std::string> a,
                                          const std::vector<std::string>& b) {
  check_disjoint(a, b);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

class Inferencer {
public:
  Inferencer(const Grammar& grammar, FreshSupply& supply)
      : grammar_(grammar), supply_(supply) {}

  struct Derived {
    RetPtr type;
    std::vector<std::string> introduced;  // allocation order
  };

  Derived infer(const Expression& e, const TypeEnv& env) {
    return std::visit(
        [&](const auto& node) { return infer_node(node, env); }, e.node());
  }

  /// Bindings for every variable this run allocated, in allocation order.
  GlobalSet take_bindings() {
    GlobalSet set;
    for (const std::string& name : allocation_order_) {
      auto it = bodies_.find(name);
      if (it == bodies_.end()) {
        throw Error("internal: type variable '" + name + "' never bound");
      }
      set.define(name, it->second);
    }
    return set;
  }

private:
  Derived infer_node(const Empty&, const TypeEnv&) {
    return {ret_empty(), {}};
  }

  Derived infer_node(const Terminal&, const TypeEnv&) {
    return {ret_empty(), {}};
  }

  Derived infer_node(const NotPredicate&, const TypeEnv&) {
    return {ret_empty(), {}};
  }

  Derived infer_node(const Nonterminal& nt, const TypeEnv& env) {
    if (const std::string* var = env.lookup(nt.name)) {
      return {ret_var(*var), {}};
    }
    std::string var = allocate();
    Derived body = infer(*grammar_.rule(nt.name), env.with(nt.name, var));
    bind(var, body.type);
    std::vector<std::string> introduced{var};
    return {ret_var(std::move(var)),
            merge_introduced(std::move(introduced), body.introduced)};
  }

  Derived infer_node(const Sequence& seq, const TypeEnv& env) {
    Derived first = infer(*seq.first, env);
    Derived second = infer(*seq.second, env);
    return {ret_concat(first.type, second.type),
            merge_introduced(std::move(first.introduced), second.introduced)};
  }

  Derived infer_node(const Choice& alt, const TypeEnv& env) {
    Derived first = infer(*alt.first, env);
    Derived second = infer(*alt.second, env);
    return {ret_union(first.type, second.type),
            merge_introduced(std::move(first.introduced), second.introduced)};
  }

  Derived infer_node(const Repetition& rep, const TypeEnv& env) {
    Derived body = infer(*rep.body, env);
    return {ret_star(body.type), std::move(body.introduced)};
  }

  Derived infer_node(const Capture& cap, const TypeEnv& env) {
    Derived body = infer(*cap.body, env);
    return {ret_label(cap.label, body.type), std::move(body.introduced)};
  }

  Derived infer_node(const FoldCapture& fold, const TypeEnv& env) {
    std::string var = allocate();
    Derived seed = infer(*fold.seed, env);
    Derived step = infer(*fold.step, env);
    // type X = L[X, T2] | T1
    bind(var, ret_union(
                  ret_label(fold.label, ret_concat(ret_var(var), step.type)),
                  seed.type));
    std::vector<std::string> introduced{var};
    introduced = merge_introduced(std::move(introduced), seed.introduced);
    introduced = merge_introduced(std::move(introduced), step.introduced);
    return {ret_var(std::move(var)), std::move(introduced)};
  }

  std::string allocate() {
    std::string name = supply_.fresh();
    allocation_order_.push_back(name);
    return name;
  }

  void bind(const std::string& name, RetPtr body) {
    if (!bodies_.emplace(name, std::move(body)).second) {
      throw Error("internal: type variable '" + name + "' redefined");
    }
  }

  const Grammar& grammar_;
  FreshSupply& supply_;
  std::vector<std::string> allocation_order_;
  std::map<std::string, RetPtr> bodies_;
};

RetPtr rewrite_vars(const RetType& t,
                    const std::map<std::string, std::string>& rename) {
  return std::visit(
      [&](const auto& node) -> RetPtr {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, REmpty>) {
          return ret_empty();
        } else if constexpr (std::is_same_v<T, RConcat>) {
          return ret_concat(rewrite_vars(*node.first, rename),
                            rewrite_vars(*node.second, rename));
        } else if constexpr (std::is_same_v<T, RUnion>) {
          return ret_union(rewrite_vars(*node.first, rename),
                           rewrite_vars(*node.second, rename));
        } else if constexpr (std::is_same_v<T, RStar>) {
          return ret_star(rewrite_vars(*node.body, rename));
        } else if constexpr (std::is_same_v<T, RLabel>) {
          return ret_label(node.label, rewrite_vars(*node.body, rename));
        } else {
          static_assert(std::is_same_v<T, RVar>);
          auto it = rename.find(node.name);
          return ret_var(it == rename.end() ? node.name : it->second);
        }
      },
      t.node());
}

// Canonical form for alpha-comparison: variables renamed in first-encounter
// order of a deterministic traversal (root, then each discovered binding).
struct CanonicalForm {
  RetPtr root;
  std::vector<RetPtr> bodies;
};

class Canonicalizer {
public:
  explicit Canonicalizer(const InferenceResult& result) : result_(result) {}

  CanonicalForm run() {
    discover(*result_.root);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      discover(*result_.bindings.resolve(queue_[i]));
    }
    // Bindings unreachable from the root, in definition order.
    for (const std::string& name : result_.bindings.names()) {
      if (!rename_.contains(name)) {
        assign(name);
        discover(*result_.bindings.resolve(name));
      }
    }
    CanonicalForm canon;
    canon.root = rewrite_vars(*result_.root, rename_);
    for (const std::string& name : queue_) {
      canon.bodies.push_back(
          rewrite_vars(*result_.bindings.resolve(name), rename_));
    }
    return canon;
  }

private:
  void assign(const std::string& name) {
    rename_[name] = "C" + std::to_string(rename_.size() + 1);
    queue_.push_back(name);
  }

  void discover(const RetType& t) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, RVar>) {
            if (!rename_.contains(node.name) &&
                result_.bindings.contains(node.name)) {
              assign(node.name);
            }
          } else if constexpr (std::is_same_v<T, RConcat> ||
                               std::is_same_v<T, RUnion>) {
            discover(*node.first);
            discover(*node.second);
          } else if constexpr (std::is_same_v<T, RStar> ||
                               std::is_same_v<T, RLabel>) {
            discover(*node.body);
          }
        },
        t.node());
  }

  const InferenceResult& result_;
  std::map<std::string, std::string> rename_;
  std::vector<std::string> queue_;
};

}  // namespace

InferenceResult infer_expression(const Grammar& g, const Expression& e,
                                 const TypeEnv& env, FreshSupply& supply) {
  Inferencer inferencer(g, supply);
  Inferencer::Derived derived = inferencer.infer(e, env);
  InferenceResult result;
  result.root = std::move(derived.type);
  result.bindings = inferencer.take_bindings();
  result.introduced = std::move(derived.introduced);
  return result;
}

InferenceResult infer_grammar(const Grammar& g, const InferOptions& options) {
  WellFormednessReport report = check_well_formed(g);
  if (!report.is_well_formed() && !options.force) {
    throw WellFormednessError("grammar is not well formed\n" +
                              report.to_text());
  }
  FreshSupply supply;
  InferenceResult result = infer_expression(g, *g.start(), TypeEnv(), supply);
  if (options.dedup) result = dedup_bindings(result);
  result.unguarded = unguarded_cycle(result.bindings);
  return result;
}

bool alpha_equal(const InferenceResult& a, const InferenceResult& b) {
  if (a.bindings.size() != b.bindings.size()) return false;
  CanonicalForm ca = Canonicalizer(a).run();
  CanonicalForm cb = Canonicalizer(b).run();
  if (!equal(*ca.root, *cb.root)) return false;
  if (ca.bodies.size() != cb.bodies.size()) return false;
  for (std::size_t i = 0; i < ca.bodies.size(); ++i) {
    if (!equal(*ca.bodies[i], *cb.bodies[i])) return false;
  }
  return true;
}

InferenceResult dedup_bindings(const InferenceResult& result) {
  std::vector<std::string> names = result.bindings.names();
  std::map<std::string, RetPtr> bodies;
  for (const std::string& name : names) {
    bodies[name] = result.bindings.resolve(name);
  }
  RetPtr root = result.root;

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < names.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < names.size() && !changed; ++j) {
        if (!equal(*bodies[names[i]], *bodies[names[j]])) continue;
        std::map<std::string, std::string> rename{{names[j], names[i]}};
        for (const std::string& name : names) {
          bodies[name] = rewrite_vars(*bodies[name], rename);
        }
        root = rewrite_vars(*root, rename);
        bodies.erase(names[j]);
        names.erase(names.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    }
  }

  InferenceResult out;
  out.root = std::move(root);
  for (const std::string& name : names) {
    out.bindings.define(name, bodies[name]);
  }
  out.introduced = names;
  out.unguarded = unguarded_cycle(out.bindings);
  return out;
}

}  // namespace cpeg
