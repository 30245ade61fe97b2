#pragma once

#include <map>
#include <string_view>

#include "dalg/mpoly.hpp"

namespace dalg {

// Element of Q(params): a plain rational, or a reduced quotient of parameter
// polynomials whose denominator is primitive with positive leading coefficient.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(const Rational& q) : q_(q) {}  // NOLINT
  Coefficient(long v) : q_(v) {}              // NOLINT
  Coefficient(int v) : q_(v) {}               // NOLINT
  static Coefficient param(std::string_view name);
  static Coefficient quotient(const MPoly& num, const MPoly& den);

  bool is_rational() const { return rat_; }
  // Throws std::domain_error for a non-constant value.
  const Rational& rational() const;
  MPoly num() const { return rat_ ? MPoly(q_) : num_; }
  MPoly den() const { return rat_ ? MPoly(1) : den_; }
  bool is_zero() const { return rat_ && sgn(q_) == 0; }

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a);
  Coefficient pow(unsigned e) const;
  friend bool operator==(const Coefficient& a, const Coefficient& b);

 private:
  bool rat_ = true;
  Rational q_;
  MPoly num_, den_;
};

// Unassigned parameter variables stay symbolic; any other missing variable
// is an error (std::invalid_argument).
Coefficient evaluate(const MPoly& p, const std::map<VarId, Coefficient>& assignment);

}  // namespace dalg
