#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sierpinski {

// Precondition violated by the caller (bad argument, out-of-range depth, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An operation produced a non-finite component.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sierpinski
