#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dalg/mpoly.hpp"

namespace dalg {

struct DiffVar {
  std::string seq;
  int shift = 0;
  VarId id() const { return seq_var(seq, shift); }
};

// Polynomial in shifted sequence terms, the index n and parameters.
class DiffPoly {
 public:
  DiffPoly() = default;
  DiffPoly(MPoly body) : body_(std::move(body)) {}  // NOLINT
  const MPoly& body() const { return body_; }
  bool is_zero() const { return body_.is_zero(); }
  // No sequence variables at all.
  bool is_constant() const;
  bool has_index() const;
  std::vector<std::string> sequences() const;
  std::vector<VarId> seq_vars() const;

  friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) { return a.body_ + b.body_; }
  friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) { return a.body_ - b.body_; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) { return a.body_ * b.body_; }
  friend DiffPoly operator-(const DiffPoly& a) { return -a.body_; }
  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

 private:
  MPoly body_;
};

// Reduced quotient; denominator primitive with positive canonical lead.
class RatExpr {
 public:
  RatExpr() : den_(1) {}
  RatExpr(const MPoly& num) : num_(num), den_(1) {}  // NOLINT
  RatExpr(const MPoly& num, const MPoly& den);
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator-(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator/(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator-(const RatExpr& a);
  RatExpr pow(unsigned e) const;
  friend bool operator==(const RatExpr&, const RatExpr&) = default;

 private:
  MPoly num_, den_;
};

struct OrderDegree {
  int order = 0;
  unsigned degree = 0;
  bool constant = false;
};
OrderDegree order_degree(const DiffPoly& p);
int order(const DiffPoly& p);
// Highest shift of seq occurring in p, or -1.
int order_in(const DiffPoly& p, std::string_view seq);
// Highest-ranked sequence variable at the top shift; throws on constants.
VarId top_var(const DiffPoly& p);

MPoly shift(const MPoly& p, int k);
DiffPoly shift(const DiffPoly& p, int k);
RatExpr shift(const RatExpr& r, int k);
DiffPoly initial(const DiffPoly& p);
bool is_rationalizing(const DiffPoly& p);
RatExpr solve_linear(const DiffPoly& p, VarId v);
inline RatExpr solve_linear(const DiffPoly& p, const DiffVar& v) { return solve_linear(p, v.id()); }

struct Substitution {
  DiffPoly numerator;
  DiffPoly denominator;  // cleared denominator, p(bindings) = numerator / denominator
};
Substitution substitute(const DiffPoly& p, const std::map<VarId, RatExpr>& bindings);
RatExpr substitute_rat(const MPoly& p, const std::map<VarId, RatExpr>& bindings);

// Expanded, parameter content and integer content removed, positive
// leading coefficient under the canonical lex order.
DiffPoly normalize(const DiffPoly& p);
// Divides out the gcd of the coefficients with respect to the non-parameter variables.
MPoly remove_param_content(const MPoly& p);
DiffPoly rename_sequence(const DiffPoly& p, std::string_view from, std::string_view to);
MPoly rename_sequence(const MPoly& p, std::string_view from, std::string_view to);

}  // namespace dalg
