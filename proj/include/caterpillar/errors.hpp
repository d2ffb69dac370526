#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace caterpillar {

// Parameter outside the documented domain of an operation (N < 3, k > N-2, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed external input: bad literal, bad file, vertex index out of range.
// `line` is 1-based, 0 when no line applies.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Caller handed a well-formed value that violates an operation's precondition,
// e.g. encoding a tree that is not a caterpillar.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace caterpillar
