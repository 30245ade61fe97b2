#include "dalg/coefficient.hpp"

#include <stdexcept>

#include "dalg/polyalg.hpp"

namespace dalg {

Coefficient Coefficient::param(std::string_view name) { return quotient(MPoly::var(param_var(name)), MPoly(1)); }

Coefficient Coefficient::quotient(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  Coefficient c;
  if (num.is_zero()) return c;
  if (num.is_constant() && den.is_constant()) {
    c.q_ = num.constant_term() / den.constant_term();
    return c;
  }
  MPoly n = num, d = den;
  if (!d.is_constant()) {
    MPoly g = gcd(n, d);
    if (!g.is_constant()) {
      n = divide_exact(n, g);
      d = divide_exact(d, g);
    }
  }
  Rational s = content(d);
  if (sgn(canonical_lead(d).second) < 0) s = -s;
  n *= Rational(1 / s);
  d *= Rational(1 / s);
  if (d.is_constant() && n.is_constant()) {
    c.q_ = n.constant_term();
    return c;
  }
  c.rat_ = false;
  c.num_ = std::move(n);
  c.den_ = std::move(d);
  return c;
}

const Rational& Coefficient::rational() const {
  if (!rat_) throw std::domain_error("coefficient depends on symbolic parameters");
  return q_;
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  if (a.rat_ && b.rat_) return Coefficient(Rational(a.q_ + b.q_));
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  MPoly ad = a.den(), bd = b.den();
  if (ad == bd) return Coefficient::quotient(a.num() + b.num(), ad);
  return Coefficient::quotient(a.num() * bd + b.num() * ad, ad * bd);
}

Coefficient operator-(const Coefficient& a) {
  Coefficient c = a;
  if (c.rat_)
    c.q_ = -c.q_;
  else
    c.num_ = -c.num_;
  return c;
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  if (a.rat_ && b.rat_) return Coefficient(Rational(a.q_ * b.q_));
  if (a.is_zero() || b.is_zero()) return Coefficient();
  return Coefficient::quotient(a.num() * b.num(), a.den() * b.den());
}

Coefficient operator/(const Coefficient& a, const Coefficient& b) {
  if (b.is_zero()) throw std::domain_error("division by zero coefficient");
  if (a.rat_ && b.rat_) return Coefficient(Rational(a.q_ / b.q_));
  return Coefficient::quotient(a.num() * b.den(), a.den() * b.num());
}

Coefficient Coefficient::pow(unsigned e) const {
  if (rat_) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), e);
    return Coefficient(r);
  }
  Coefficient c = *this;
  c.num_ = num_.pow(e);
  c.den_ = den_.pow(e);
  return c;
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.rat_ != b.rat_) return false;
  if (a.rat_) return a.q_ == b.q_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

Coefficient evaluate(const MPoly& p, const std::map<VarId, Coefficient>& a) {
  bool all_rational = true;
  for (VarId v : p.variables()) {
    auto it = a.find(v);
    if (it == a.end()) {
      if (!is_param(v)) throw std::invalid_argument("evaluate: no value for " + var_info(v).name);
      all_rational = false;
    } else if (!it->second.is_rational()) {
      all_rational = false;
    }
  }
  if (all_rational) {
    std::map<VarId, Rational> q;
    for (VarId v : p.variables()) q.emplace(v, a.at(v).rational());
    return Coefficient(p.evaluate(q));
  }
  // Common-denominator evaluation keeps a single gcd reduction at the end.
  std::map<VarId, MPoly> nums;
  std::map<VarId, MPoly> dens;
  std::map<VarId, std::uint32_t> degs;
  for (VarId v : p.variables()) {
    auto it = a.find(v);
    if (it == a.end()) continue;
    nums[v] = it->second.num();
    dens[v] = it->second.den();
    degs[v] = p.degree(v);
  }
  MPoly num, den(1);
  for (auto& [v, d] : degs) den = den * dens[v].pow(d);
  for (auto& [m, c] : p.terms()) {
    MPoly term(c);
    std::vector<Monomial::Factor> rest;
    for (auto& [v, e] : m.factors())
      if (!nums.count(v)) rest.push_back({v, e});
    for (auto& [v, d] : degs) {
      std::uint32_t e = m.degree(v);
      if (e) term = term * nums[v].pow(e);
      if (d > e) term = term * dens[v].pow(d - e);
    }
    num += term.mul_term(Monomial(std::move(rest)), 1);
  }
  return Coefficient::quotient(num, den);
}

}  // namespace dalg
