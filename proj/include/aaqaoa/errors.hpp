#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aaqaoa {

/// Violated precondition or malformed input. Maps to CLI exit code 2.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Edge-list parse failure; carries the 1-based line number.
class ParseError : public ContractError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ContractError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A configured size cap would be exceeded. Maps to CLI exit code 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aaqaoa
