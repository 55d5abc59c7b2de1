#pragma once

#include <stdexcept>
#include <string>

namespace nilq {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed user input: bad expression, unknown generator, invalid presentation.
struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// Parse failure with source position (1-based line/column).
struct ParseError : InputError {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : InputError(msg), line(line_), col(col_) {}
};

// A configured resource limit was exceeded (class cap, dimension cap, search cap).
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

}  // namespace nilq
