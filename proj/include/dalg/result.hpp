#pragma once

#include <string>
#include <vector>

#include "dalg/diffpoly.hpp"

namespace dalg {

struct ClosureResult {
  DiffPoly polynomial;  // canonical, in the output sequence
  std::string seq = "s";
  int order = 0;
  unsigned degree = 0;
  int bound = 0;  // the order bound the construction guarantees
  // Polynomials assumed nonzero along the sequence.
  std::vector<MPoly> side_conditions;
};

// Fills order and degree from the polynomial.
ClosureResult make_result(DiffPoly p, std::string seq, int bound, std::vector<MPoly> side);

}  // namespace dalg
