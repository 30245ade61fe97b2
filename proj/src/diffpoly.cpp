#include "dalg/diffpoly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dalg/errors.hpp"
#include "dalg/polyalg.hpp"

namespace dalg {

bool DiffPoly::is_constant() const {
  for (VarId v : body_.variables())
    if (is_seq(v)) return false;
  return true;
}

bool DiffPoly::has_index() const { return body_.contains(index_var()); }

std::vector<std::string> DiffPoly::sequences() const {
  std::set<std::string> s;
  for (VarId v : body_.variables())
    if (is_seq(v)) s.insert(var_info(v).seq);
  return {s.begin(), s.end()};
}

std::vector<VarId> DiffPoly::seq_vars() const {
  std::vector<VarId> out;
  for (VarId v : body_.variables())
    if (is_seq(v)) out.push_back(v);
  return out;
}

RatExpr::RatExpr(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw std::domain_error("RatExpr with zero denominator");
  if (num.is_zero()) {
    den_ = MPoly(1);
    return;
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
  if (s != 1) {
    Rational inv = 1 / s;
    n *= inv;
    d *= inv;
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
  if (a.den_ == b.den_) return RatExpr(a.num_ + b.num_, a.den_);
  return RatExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatExpr operator-(const RatExpr& a) {
  RatExpr r = a;
  r.num_ = -r.num_;
  return r;
}

RatExpr operator-(const RatExpr& a, const RatExpr& b) { return a + (-b); }

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
  // Cross-cancel first so the operands stay small.
  MPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  MPoly an = divide_exact(a.num_, g1), bd = divide_exact(b.den_, g1);
  MPoly bn = divide_exact(b.num_, g2), ad = divide_exact(a.den_, g2);
  return RatExpr(an * bn, ad * bd);
}

RatExpr operator/(const RatExpr& a, const RatExpr& b) {
  if (b.is_zero()) throw std::domain_error("RatExpr division by zero");
  return a * RatExpr(b.den_, b.num_);
}

RatExpr RatExpr::pow(unsigned e) const {
  RatExpr r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  if (e == 0) r.num_ = MPoly(1), r.den_ = MPoly(1);
  return r;
}

OrderDegree order_degree(const DiffPoly& p) {
  OrderDegree od;
  od.constant = p.is_constant();
  if (od.constant) return od;
  od.order = order(p);
  od.degree = p.body().total_degree([](VarId v) { return is_seq(v); });
  return od;
}

int order(const DiffPoly& p) {
  int o = 0;
  for (VarId v : p.seq_vars()) o = std::max(o, var_info(v).shift);
  return o;
}

int order_in(const DiffPoly& p, std::string_view seq) {
  int o = -1;
  for (VarId v : p.seq_vars())
    if (var_info(v).seq == seq) o = std::max(o, var_info(v).shift);
  return o;
}

VarId top_var(const DiffPoly& p) {
  auto vs = p.seq_vars();
  if (vs.empty()) throw std::invalid_argument("top_var of a constant difference polynomial");
  return *std::max_element(vs.begin(), vs.end(), rank_less);
}

MPoly shift(const MPoly& p, int k) {
  if (k == 0) return p;
  if (k < 0) throw std::invalid_argument("negative shift");
  MPoly r = p.map_vars([k](VarId v) { return is_seq(v) ? shifted(v, k) : v; });
  VarId n = index_var();
  if (r.contains(n)) r = r.substitute(n, MPoly::var(n) + MPoly(k));
  return r;
}

DiffPoly shift(const DiffPoly& p, int k) { return shift(p.body(), k); }

RatExpr shift(const RatExpr& r, int k) { return RatExpr(shift(r.num(), k), shift(r.den(), k)); }

DiffPoly initial(const DiffPoly& p) {
  if (p.is_constant()) throw std::invalid_argument("initial of a constant difference polynomial");
  VarId x = top_var(p);
  return p.body().coefficient(x, p.body().degree(x));
}

bool is_rationalizing(const DiffPoly& p) {
  if (p.is_constant()) return false;
  return p.body().degree(top_var(p)) == 1;
}

RatExpr solve_linear(const DiffPoly& p, VarId v) {
  if (p.body().degree(v) != 1)
    throw std::invalid_argument("solve_linear: degree in " + var_info(v).name + " is not 1");
  MPoly c1 = p.body().coefficient(v, 1), c0 = p.body().coefficient(v, 0);
  return RatExpr(-c0, c1);
}

RatExpr substitute_rat(const MPoly& p, const std::map<VarId, RatExpr>& bindings) {
  std::vector<VarId> bound;
  for (VarId v : p.variables())
    if (bindings.count(v)) bound.push_back(v);
  if (bound.empty()) return RatExpr(p);
  // Variables sharing a denominator share its power in the common denominator.
  std::vector<MPoly> dens;
  std::vector<std::size_t> group;
  for (VarId v : bound) {
    const MPoly& d = bindings.at(v).den();
    std::size_t g = 0;
    while (g < dens.size() && !(dens[g] == d)) ++g;
    if (g == dens.size()) dens.push_back(d);
    group.push_back(g);
  }
  std::vector<std::uint32_t> gdeg(dens.size(), 0);
  for (auto& [m, c] : p.terms()) {
    std::vector<std::uint32_t> sum(dens.size(), 0);
    for (std::size_t i = 0; i < bound.size(); ++i) sum[group[i]] += m.degree(bound[i]);
    for (std::size_t g = 0; g < dens.size(); ++g) gdeg[g] = std::max(gdeg[g], sum[g]);
  }
  std::map<std::pair<std::size_t, std::uint32_t>, MPoly> cache;
  auto power = [&](std::size_t slot, const MPoly& base, std::uint32_t e) -> const MPoly& {
    auto key = std::make_pair(slot, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, base.pow(e)).first;
    return it->second;
  };
  // slots: bound variables first, then denominator groups
  std::map<std::vector<std::uint32_t>, MPoly> groups;
  for (auto& [m, c] : p.terms()) {
    std::vector<std::uint32_t> key;
    std::vector<Monomial::Factor> rest;
    for (VarId v : bound) key.push_back(m.degree(v));
    for (auto& f : m.factors())
      if (!bindings.count(f.first)) rest.push_back(f);
    groups[key] += MPoly::monomial(Monomial(std::move(rest)), c);
  }
  MPoly num, den(1);
  for (std::size_t g = 0; g < dens.size(); ++g)
    if (gdeg[g]) den = den * power(bound.size() + g, dens[g], gdeg[g]);
  for (auto& [key, rest] : groups) {
    MPoly term = rest;
    std::vector<std::uint32_t> sum(dens.size(), 0);
    for (std::size_t i = 0; i < bound.size(); ++i) {
      if (key[i]) term = term * power(i, bindings.at(bound[i]).num(), key[i]);
      sum[group[i]] += key[i];
    }
    for (std::size_t g = 0; g < dens.size(); ++g)
      if (gdeg[g] > sum[g]) term = term * power(bound.size() + g, dens[g], gdeg[g] - sum[g]);
    num += term;
  }
  return RatExpr(num, den);
}

Substitution substitute(const DiffPoly& p, const std::map<VarId, RatExpr>& bindings) {
  RatExpr r = substitute_rat(p.body(), bindings);
  return {r.num(), r.den()};
}

MPoly remove_param_content(const MPoly& p) {
  bool has_param = false;
  for (VarId v : p.variables()) has_param |= is_param(v);
  if (!has_param) return p;
  std::map<std::vector<Monomial::Factor>, std::vector<MPoly::Term>> groups;
  for (auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> key, par;
    for (auto& f : m.factors()) (is_param(f.first) ? par : key).push_back(f);
    groups[key].emplace_back(Monomial(std::move(par)), c);
  }
  MPoly g;
  for (auto& [k, ts] : groups) {
    MPoly c = MPoly::from_terms(ts);
    g = g.is_zero() ? c : gcd(g, c);
    if (g.is_constant()) return p;
  }
  return divide_exact(p, g);
}

DiffPoly normalize(const DiffPoly& p) {
  if (p.is_zero()) return p;
  return primitive(remove_param_content(p.body()));
}

MPoly rename_sequence(const MPoly& p, std::string_view from, std::string_view to) {
  return p.map_vars([&](VarId v) {
    auto& info = var_info(v);
    if (info.kind == VarKind::Seq && info.seq == from) return seq_var(to, info.shift);
    return v;
  });
}

DiffPoly rename_sequence(const DiffPoly& p, std::string_view from, std::string_view to) {
  return rename_sequence(p.body(), from, to);
}

}  // namespace dalg
