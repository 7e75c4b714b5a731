#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace pprod {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text; `position` is the 0-based offset of the offending character.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), detail_(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }
  /// Message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }

private:
  std::string detail_;
  std::size_t position_;
};

/// Structurally invalid automaton or document (undeclared variable, missing field, ...).
class SchemaError : public Error {
public:
  using Error::Error;
};

class UnassignedVariableError : public Error {
public:
  explicit UnassignedVariableError(std::string variable)
      : Error("unassigned variable '" + variable + "'"), variable_(std::move(variable)) {}
  const std::string& variable() const noexcept { return variable_; }

private:
  std::string variable_;
};

/// A configured resource limit was exhausted; never a verdict.
class ResourceLimitError : public Error {
public:
  ResourceLimitError(std::string limit, const std::string& detail)
      : Error("resource limit '" + limit + "' exceeded: " + detail), limit_(std::move(limit)) {}
  const std::string& limit() const noexcept { return limit_; }

private:
  std::string limit_;
};

/// An operation was applied outside its precondition (e.g. a non-special rule given to a decider).
class PreconditionError : public Error {
public:
  using Error::Error;
};

}  // namespace pprod
