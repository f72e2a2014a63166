#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nodedom {

/// Malformed input data. Carries the 1-based line number when the source is
/// a text file (0 when the input is not line-oriented).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : std::move(message)),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A module precondition was violated (e.g. a two-hop collapse passed to an
/// operation that only supports the one-hop variant).
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource budget was exceeded (e.g. simplex count cap).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nodedom
