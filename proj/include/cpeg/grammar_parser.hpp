#pragma once

#include <string_view>

#include "cpeg/grammar.hpp"

namespace cpeg {

/// Reads a grammar file: one rule per `Name = expression` group, PEG
/// operators plus `{ e #Label }` and `^{ e #Label }`, `//` line comments.
/// The first rule is the start rule. Returns a fully desugared grammar.
/// Throws SyntaxError (with position) on malformed syntax, duplicate rule
/// names, or references to undefined nonterminals.
Grammar parse_grammar(std::string_view text);

}  // namespace cpeg
