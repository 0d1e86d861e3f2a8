#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpeg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Grammar-text error with a 1-based source position.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class UndefinedNonterminalError : public Error {
public:
  explicit UndefinedNonterminalError(const std::string& name)
      : Error("undefined nonterminal '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

private:
  std::string name_;
};

class UnboundVariableError : public Error {
public:
  explicit UnboundVariableError(const std::string& name)
      : Error("unbound type variable '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

private:
  std::string name_;
};

class LeftRecursionError : public Error {
public:
  explicit LeftRecursionError(std::vector<std::string> cycle)
      : Error("left recursion: " + join(cycle)), cycle_(std::move(cycle)) {}

  const std::vector<std::string>& cycle() const { return cycle_; }

private:
  static std::string join(const std::vector<std::string>& cycle) {
    std::string out;
    for (const auto& name : cycle) {
      if (!out.empty()) out += " -> ";
      out += name;
    }
    if (!cycle.empty()) out += " -> " + cycle.front();
    return out;
  }

  std::vector<std::string> cycle_;
};

class UnguardedTypeError : public Error {
public:
  explicit UnguardedTypeError(std::vector<std::string> cycle)
      : Error("unguarded recursive type: " + join(cycle)),
        cycle_(std::move(cycle)) {}

  const std::vector<std::string>& cycle() const { return cycle_; }

private:
  static std::string join(const std::vector<std::string>& cycle) {
    std::string out;
    for (const auto& name : cycle) {
      if (!out.empty()) out += " -> ";
      out += name;
    }
    if (!cycle.empty()) out += " -> " + cycle.front();
    return out;
  }

  std::vector<std::string> cycle_;
};

/// Raised when the evaluator exceeds its recursion budget. This signals a
/// pathological grammar/input pairing, not an ordinary parse failure.
class DepthLimitError : public Error {
public:
  explicit DepthLimitError(std::size_t limit)
      : Error("parser recursion depth limit exceeded (" +
              std::to_string(limit) + ")") {}
};

class WellFormednessError : public Error {
public:
  explicit WellFormednessError(const std::string& message) : Error(message) {}
};

}  // namespace cpeg
