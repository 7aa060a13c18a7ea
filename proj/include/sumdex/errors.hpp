#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sumdex {

// Caller supplied something outside an operation's domain (bad sizes, a = 0, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized text. `offset` is the byte position of the first bad byte.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A result failed its own a-posteriori check (achieved != claimed, witness does not
// validate). Indicates a bug, never bad input.
class ValidationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sumdex
