#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dalg {

// A reported mathematical condition: vanishing determinant, zero initial,
// missing or ambiguous roots. CLI exit code 1.
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured Groebner cap was hit. CLI exit code 2.
struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// CLI exit code 3.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// A broken internal invariant, never an input problem.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace dalg
