#pragma once

#include <iosfwd>
#include <string>

#include "dalg/coefficient.hpp"
#include "dalg/result.hpp"
#include "dalg/seqeval.hpp"

namespace dalg {

std::string render(const Rational& q);
std::string render(const Coefficient& c);
// Expanded, terms ascending in the canonical order.
std::string render(const MPoly& p);
// "<p> = 0"; the zero polynomial gives "0 = 0".
std::string render_equation(const DiffPoly& p);
// "s(n+r) = N/D" for a rationalizing p, with N and D printed as
// content*monomial*(rest). Falls back to the equation form otherwise.
std::string render_solved(const DiffPoly& p);

// One "index: value" line per term.
void write_terms(std::ostream& out, const TermTable& t);
TermTable read_terms(std::istream& in, const std::vector<std::string>& params = {});

}  // namespace dalg
