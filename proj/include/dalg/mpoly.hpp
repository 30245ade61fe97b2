#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "dalg/vars.hpp"

namespace dalg {

using Rational = mpq_class;
using Integer = mpz_class;

class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial var(VarId v, std::uint32_t e = 1);

  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  std::uint32_t degree(VarId v) const;
  std::uint32_t total_degree() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> f_;  // ascending VarId, exponents > 0
};

// Storage order: lex with larger VarId more significant. A monomial order,
// so multiplying by a monomial keeps terms sorted.
int storage_compare(const Monomial& a, const Monomial& b);

class MPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MPoly(long c) : MPoly(Rational(c)) {}
  MPoly(int c) : MPoly(Rational(c)) {}
  static MPoly var(VarId v, std::uint32_t e = 1);
  static MPoly monomial(Monomial m, Rational c);
  // Terms may be unsorted and contain duplicates or zeros.
  static MPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  bool is_monomial() const { return t_.size() == 1; }
  Rational constant_term() const;
  // Leading term in storage order.
  const Term& lead() const { return t_.front(); }

  std::uint32_t degree(VarId v) const;
  std::uint32_t total_degree() const;
  // Total degree counting only variables accepted by pred.
  std::uint32_t total_degree(const std::function<bool(VarId)>& pred) const;
  std::vector<VarId> variables() const;  // ascending id
  bool contains(VarId v) const;

  // Coefficients as a polynomial in v; index is the power of v.
  std::vector<MPoly> coefficients(VarId v) const;
  MPoly coefficient(VarId v, std::uint32_t e) const;
  static MPoly from_coefficients(VarId v, const std::vector<MPoly>& cs);

  MPoly substitute(VarId v, const MPoly& value) const;
  MPoly substitute(const std::map<VarId, MPoly>& values) const;
  MPoly map_vars(const std::function<VarId(VarId)>& f) const;
  MPoly pow(unsigned e) const;

  // Throws std::invalid_argument on a variable missing from the assignment.
  Rational evaluate(const std::map<VarId, Rational>& assignment) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator-(MPoly a);
  MPoly mul_term(const Monomial& m, const Rational& c) const;
  friend bool operator==(const MPoly&, const MPoly&) = default;

 private:
  std::vector<Term> t_;  // strictly descending storage order, nonzero coefficients
  static std::vector<Term> combine(const std::vector<Term>& a, const std::vector<Term>& b, int sign);
};

}  // namespace dalg
