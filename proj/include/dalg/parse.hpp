#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dalg/diffpoly.hpp"
#include "dalg/holonomic.hpp"

namespace dalg {

struct ParseOptions {
  std::vector<std::string> params;
  // Extra identifiers bound to fixed expressions (X, Y, ... for arith).
  std::map<std::string, MPoly> symbols;
};

// Rational expression over sequence terms, n and parameters.
RatExpr parse_expression(std::string_view text, const ParseOptions& opt = {});

enum class EquationKind { Difference, Holonomic, MultiSequence };

struct ParsedEquation {
  EquationKind kind = EquationKind::Difference;
  DiffPoly poly;  // numerator of lhs - rhs
  std::optional<HoloEq> holo;
};

// "lhs = rhs" or a bare expression meaning "= 0".
ParsedEquation parse_equation(std::string_view text, const ParseOptions& opt = {});
DiffPoly parse_diffpoly(std::string_view text, const ParseOptions& opt = {});

std::vector<std::string> split_list(std::string_view text, char sep = ',');

}  // namespace dalg
