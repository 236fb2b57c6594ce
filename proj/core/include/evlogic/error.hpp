#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evlogic {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error with the byte offset where it was detected.
struct ParseError : Error {
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

struct ModelError : Error {
  using Error::Error;
};

struct EvalError : Error {
  using Error::Error;
};

struct SignatureError : Error {
  using Error::Error;
};

}  // namespace evlogic
