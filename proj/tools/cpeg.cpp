#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cpeg/errors.hpp"
#include "cpeg/grammar_parser.hpp"
#include "cpeg/parse_engine.hpp"
#include "cpeg/ret.hpp"
#include "cpeg/static_analysis.hpp"
#include "cpeg/type_inference.hpp"

namespace {

// Exit codes: 0 ok/member, 1 parse failure/not-member, 2 IO or usage,
// 3 grammar errors, 4 well-formedness or left-recursion rejection.
constexpr int exit_ok = 0;
constexpr int exit_reject = 1;
constexpr int exit_io = 2;
constexpr int exit_grammar = 3;
constexpr int exit_static = 4;

struct Options {
  std::string grammar_path;
  std::optional<std::string> input_text;
  std::optional<std::string> input_path;
  std::string format;
  bool full_match = false;
  bool allow_left_recursion = false;
  bool force_infer = false;
  bool dedup = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) {
    throw std::ios_base::failure("cannot read '" + path + "'");
  }
  return buffer.str();
}

cpeg::Grammar load_grammar(const Options& options) {
  return cpeg::parse_grammar(read_file(options.grammar_path));
}

std::string fetch_input(const Options& options) {
  if (options.input_text) return *options.input_text;
  if (options.input_path) return read_file(*options.input_path);
  throw CLI::ValidationError("provide --input or --input-file");
}

int run_check(const Options& options) {
  cpeg::Grammar grammar = load_grammar(options);
  cpeg::WellFormednessReport report = cpeg::check_well_formed(grammar);
  cpeg::RecursionInfo recursion = cpeg::recursion_info(grammar);

  std::optional<std::vector<std::string>> unguarded;
  bool inferred = false;
  if (report.is_well_formed()) {
    cpeg::InferenceResult inference = cpeg::infer_grammar(grammar);
    unguarded = inference.unguarded;
    inferred = true;
  }

  bool clean = report.is_well_formed() &&
               recursion.left_recursive_cycles.empty() &&
               (!inferred || !unguarded);

  if (options.format == "json") {
    nlohmann::json out = report.to_json();
    nlohmann::json cycles = nlohmann::json::array();
    for (const auto& cycle : recursion.left_recursive_cycles) {
      cycles.push_back(cycle);
    }
    out["left_recursive_cycles"] = cycles;
    out["recursive_nonterminals"] = recursion.recursive_nonterminals;
    if (inferred) {
      out["guarded"] = !unguarded;
      if (unguarded) out["unguarded_cycle"] = *unguarded;
    }
    out["clean"] = clean;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "well-formedness: "
              << (report.is_well_formed() ? "ok" : "violations") << "\n";
    for (const cpeg::Violation& v : report.violations) {
      std::cout << "  " << v.rule << " at " << v.path << ": " << v.reason
                << "\n";
    }
    std::cout << "left recursion: "
              << (recursion.left_recursive_cycles.empty() ? "none" : "found")
              << "\n";
    for (const auto& cycle : recursion.left_recursive_cycles) {
      std::cout << "  cycle:";
      for (const std::string& name : cycle) std::cout << " " << name;
      std::cout << "\n";
    }
    if (inferred) {
      std::cout << "guardedness: " << (unguarded ? "unguarded" : "ok") << "\n";
      if (unguarded) {
        std::cout << "  cycle:";
        for (const std::string& name : *unguarded) std::cout << " " << name;
        std::cout << "\n";
      }
    } else {
      std::cout << "guardedness: skipped (not well formed)\n";
    }
  }
  return clean ? exit_ok : exit_static;
}

int run_parse(const Options& options) {
  cpeg::Grammar grammar = load_grammar(options);
  if (!options.allow_left_recursion) cpeg::reject_left_recursion(grammar);
  std::string input = fetch_input(options);

  cpeg::ParseOptions parse_options;
  parse_options.full_match = options.full_match;
  cpeg::ParseOutcome outcome = cpeg::parse(grammar, input, parse_options);
  if (!outcome.ok()) {
    std::cerr << "parse failed at position " << outcome.furthest << "\n";
    return exit_reject;
  }
  if (options.format == "json") {
    std::cout << outcome.value().to_json().dump() << "\n";
  } else {
    std::cout << outcome.value().to_sexpr() << "\n";
  }
  std::size_t unconsumed = cpeg::scalar_length(input) - outcome.end;
  if (unconsumed > 0) {
    std::cerr << "note: " << unconsumed << " characters left unconsumed\n";
  }
  return exit_ok;
}

int run_type(const Options& options) {
  cpeg::Grammar grammar = load_grammar(options);
  cpeg::InferOptions infer_options;
  infer_options.force = options.force_infer;
  infer_options.dedup = options.dedup;
  cpeg::InferenceResult result = cpeg::infer_grammar(grammar, infer_options);
  if (result.unguarded) {
    std::cerr << "warning: unguarded recursive type:";
    for (const std::string& name : *result.unguarded) std::cerr << " " << name;
    std::cerr << "\n";
  }
  if (options.format == "json") {
    std::cout << cpeg::types_to_json(result.bindings, *result.root).dump(2)
              << "\n";
  } else {
    std::cout << cpeg::serialize_types(result.bindings, *result.root);
  }
  return exit_ok;
}

int run_validate(const Options& options) {
  cpeg::Grammar grammar = load_grammar(options);
  if (!options.allow_left_recursion) cpeg::reject_left_recursion(grammar);
  std::string input = fetch_input(options);

  cpeg::InferOptions infer_options;
  infer_options.force = options.force_infer;
  cpeg::InferenceResult inference = cpeg::infer_grammar(grammar, infer_options);

  cpeg::ParseOptions parse_options;
  parse_options.full_match = options.full_match;
  cpeg::ParseOutcome outcome = cpeg::parse(grammar, input, parse_options);
  if (!outcome.ok()) {
    std::cerr << "parse failed at position " << outcome.furthest << "\n";
    return exit_reject;
  }
  bool is_member =
      cpeg::member(outcome.value(), *inference.root, inference.bindings);
  std::cout << (is_member ? "MEMBER" : "NOT-MEMBER") << "\n";
  return is_member ? exit_ok : exit_reject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CPEG grammars: parse inputs to labeled trees, infer tree types"};
  app.require_subcommand(1);

  Options options;

  auto add_common = [&](CLI::App* cmd, bool wants_input) {
    cmd->add_option("-g,--grammar", options.grammar_path, "grammar file")
        ->required();
    if (wants_input) {
      cmd->add_option("-i,--input", options.input_text, "inline input text");
      cmd->add_option("-f,--input-file", options.input_path, "input file");
    }
  };

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse input to a tree");
  add_common(parse_cmd, true);
  parse_cmd->add_option("--format", options.format, "sexpr|json")
      ->default_val("sexpr");
  parse_cmd->add_flag("--full-match", options.full_match,
                      "fail when input is not fully consumed");
  parse_cmd->add_flag("--allow-left-recursion", options.allow_left_recursion,
                      "skip the left-recursion guard");

  CLI::App* type_cmd = app.add_subcommand("type", "infer the grammar's type");
  add_common(type_cmd, false);
  type_cmd->add_option("--format", options.format, "text|json")
      ->default_val("text");
  type_cmd->add_flag("--force-infer", options.force_infer,
                     "infer even when the grammar is not well formed");
  type_cmd->add_flag("--dedup", options.dedup,
                     "merge structurally identical type bindings");

  CLI::App* check_cmd = app.add_subcommand("check", "run the static checks");
  add_common(check_cmd, false);
  check_cmd->add_option("--format", options.format, "text|json")
      ->default_val("text");

  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "parse input and check the tree against the inferred type");
  add_common(validate_cmd, true);
  validate_cmd->add_flag("--full-match", options.full_match,
                         "fail when input is not fully consumed");
  validate_cmd->add_flag("--allow-left-recursion",
                         options.allow_left_recursion,
                         "skip the left-recursion guard");
  validate_cmd->add_flag("--force-infer", options.force_infer,
                         "infer even when the grammar is not well formed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_io;
  }

  try {
    if (app.got_subcommand(parse_cmd)) return run_parse(options);
    if (app.got_subcommand(type_cmd)) return run_type(options);
    if (app.got_subcommand(check_cmd)) return run_check(options);
    if (app.got_subcommand(validate_cmd)) return run_validate(options);
    return exit_io;
  } catch (const cpeg::SyntaxError& e) {
    std::cerr << "grammar error: " << e.what() << "\n";
    return exit_grammar;
  } catch (const cpeg::LeftRecursionError& e) {
    std::cerr << e.what() << "\n";
    return exit_static;
  } catch (const cpeg::WellFormednessError& e) {
    std::cerr << e.what();
    return exit_static;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return exit_io;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_io;
  } catch (const cpeg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_grammar;
  }
}
