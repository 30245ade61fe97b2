#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dalg/mpoly.hpp"
#include "dalg/order.hpp"

namespace dalg {

// Lex comparison under the canonical variable ranking.
int canonical_compare(const Monomial& a, const Monomial& b);
const MPoly::Term& canonical_lead(const MPoly& p);

// gcd of numerators over lcm of denominators; positive. content(0) = 0.
Rational content(const MPoly& p);
Rational rational_gcd(const Rational& a, const Rational& b);
// Integer coprime coefficients, positive canonical leading coefficient.
MPoly primitive(const MPoly& p);
// Same polynomial scaled by +-1 so the canonical leading coefficient is positive.
MPoly positive(const MPoly& p);

// gcd over Z[vars] extended to rational content: gcd(6x^2, 4x) = 2x.
MPoly gcd(const MPoly& a, const MPoly& b);
MPoly lcm(const MPoly& a, const MPoly& b);
std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b);
// Throws std::logic_error when b does not divide a.
MPoly divide_exact(const MPoly& a, const MPoly& b);

// gcd of the coefficients of p viewed in v.
MPoly content_in(const MPoly& p, VarId v);
MPoly primitive_in(const MPoly& p, VarId v);
// Largest monomial dividing every term.
Monomial monomial_content(const MPoly& p);

struct Division {
  std::vector<MPoly> quotients;
  MPoly remainder;
};
Division divide(const MPoly& p, const std::vector<MPoly>& divisors, const MonomialOrder& order);
const MPoly::Term& leading_term(const MPoly& p, const MonomialOrder& order);

}  // namespace dalg
