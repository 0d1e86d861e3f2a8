#include "cpeg/parse_engine.hpp"

#include "cpeg/errors.hpp"
#include "cpeg/unicode.hpp"

namespace cpeg {

namespace {

struct Success {
  Tree value;
  std::size_t end;
};

// Recursive-descent interpretation of the evaluation relation. Failure is
// represented by nullopt; the caller's position is untouched since positions
// are passed by value.
class Evaluator {
public:
  Evaluator(const Grammar& grammar, std::u32string_view input,
            const ParseOptions& options)
      : grammar_(grammar), input_(input), options_(options) {}

  std::optional<Success> eval(const Expression& e, std::size_t pos) {
    if (++depth_ > options_.max_depth) throw DepthLimitError(options_.max_depth);
    auto result = std::visit(
        [&](const auto& node) { return eval_node(node, pos); }, e.node());
    --depth_;
    return result;
  }

  std::size_t furthest() const { return furthest_; }
  void note_furthest(std::size_t pos) {
    if (pos > furthest_) furthest_ = pos;
  }

private:
  std::optional<Success> eval_node(const Empty&, std::size_t pos) {
    return Success{Tree(), pos};
  }

  std::optional<Success> eval_node(const Terminal& t, std::size_t pos) {
    if (pos < input_.size() && t.chars.contains(input_[pos])) {
      return Success{Tree::text(utf8_encode(input_[pos])), pos + 1};
    }
    note_furthest(pos);
    return std::nullopt;
  }

  std::optional<Success> eval_node(const Nonterminal& nt, std::size_t pos) {
    return eval(*grammar_.rule(nt.name), pos);
  }

  std::optional<Success> eval_node(const Sequence& seq, std::size_t pos) {
    auto first = eval(*seq.first, pos);
    if (!first) return std::nullopt;
    auto second = eval(*seq.second, first->end);
    if (!second) return std::nullopt;
    return Success{concat(std::move(first->value), std::move(second->value)),
                   second->end};
  }

  std::optional<Success> eval_node(const Choice& alt, std::size_t pos) {
    if (auto first = eval(*alt.first, pos)) return first;
    return eval(*alt.second, pos);
  }

  std::optional<Success> eval_node(const Repetition& rep, std::size_t pos) {
    Tree value;
    std::size_t cur = pos;
    while (true) {
      auto step = eval(*rep.body, cur);
      if (!step) break;
      // A successful iteration that consumes nothing would loop forever;
      // stop and discard it.
      if (step->end == cur) break;
      value = concat(std::move(value), std::move(step->value));
      cur = step->end;
    }
    return Success{std::move(value), cur};
  }

  std::optional<Success> eval_node(const NotPredicate& np, std::size_t pos) {
    if (eval(*np.body, pos)) return std::nullopt;
    return Success{Tree(), pos};
  }

  std::optional<Success> eval_node(const Capture& cap, std::size_t pos) {
    auto body = eval(*cap.body, pos);
    if (!body) return std::nullopt;
    return Success{Tree::node(cap.label, std::move(body->value)), body->end};
  }

  std::optional<Success> eval_node(const FoldCapture& fold, std::size_t pos) {
    auto seed = eval(*fold.seed, pos);
    if (!seed) return std::nullopt;
    Tree value = std::move(seed->value);
    std::size_t cur = seed->end;
    while (true) {
      auto step = eval(*fold.step, cur);
      if (!step) break;  // first failure ends the fold; zero steps keep
                         // the seed tree unwrapped
      if (step->end == cur) break;  // zero-consumption guard, as in Repetition
      value = Tree::node(fold.label,
                         concat(std::move(value), std::move(step->value)));
      cur = step->end;
    }
    return Success{std::move(value), cur};
  }

  const Grammar& grammar_;
  std::u32string_view input_;
  const ParseOptions& options_;
  std::size_t depth_ = 0;
  std::size_t furthest_ = 0;
};

ParseOutcome run(const Grammar& g, const Expression& e,
                 std::u32string_view input, std::size_t pos,
                 const ParseOptions& options) {
  Evaluator evaluator(g, input, options);
  auto result = evaluator.eval(e, pos);
  ParseOutcome outcome;
  outcome.furthest = evaluator.furthest();
  if (result && options.full_match && result->end < input.size()) {
    if (result->end > outcome.furthest) outcome.furthest = result->end;
    result.reset();
  }
  if (result) {
    outcome.tree = std::move(result->value);
    outcome.end = result->end;
  } else {
    outcome.end = pos;
  }
  return outcome;
}

}  // namespace

ParseOutcome eval(const Grammar& g, const Expression& e,
                  std::u32string_view input, std::size_t pos,
                  const ParseOptions& options) {
  ParseOptions prefix_options = options;
  prefix_options.full_match = false;
  return run(g, e, input, pos, prefix_options);
}

ParseOutcome parse(const Grammar& g, std::string_view input,
                   const ParseOptions& options) {
  std::u32string decoded = utf8_decode(input);
  return run(g, *g.start(), decoded, 0, options);
}

std::size_t scalar_length(std::string_view input) {
  return utf8_decode(input).size();
}

}  // namespace cpeg
