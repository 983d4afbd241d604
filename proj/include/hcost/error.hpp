#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcost {

/// Malformed or inconsistent input data (bad files, violated preconditions on
/// data the caller handed us). The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A text document failed to parse. Carries the 1-based line number.
class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hcost
