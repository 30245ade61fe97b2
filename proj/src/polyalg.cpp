#include "dalg/polyalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace dalg {

int canonical_compare(const Monomial& a, const Monomial& b) {
  auto ranked = [](const Monomial& m) {
    auto f = m.factors();
    std::sort(f.begin(), f.end(), [](auto& x, auto& y) { return rank_less(y.first, x.first); });
    return f;
  };
  auto x = ranked(a), y = ranked(b);
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i].first != y[i].first) return rank_less(y[i].first, x[i].first) ? 1 : -1;
    if (x[i].second != y[i].second) return x[i].second > y[i].second ? 1 : -1;
  }
  if (x.size() != y.size()) return x.size() > y.size() ? 1 : -1;
  return 0;
}

const MPoly::Term& canonical_lead(const MPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("canonical_lead of zero polynomial");
  const MPoly::Term* best = &p.terms()[0];
  for (auto& t : p.terms())
    if (canonical_compare(t.first, best->first) > 0) best = &t;
  return *best;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (sgn(a) == 0) return abs(b);
  if (sgn(b) == 0) return abs(a);
  Integer n = gcd(a.get_num(), b.get_num());
  Integer d = lcm(a.get_den(), b.get_den());
  Rational r(n, d);
  r.canonicalize();
  return abs(r);
}

Rational content(const MPoly& p) {
  Integer n = 0, d = 1;
  for (auto& t : p.terms()) {
    n = gcd(n, t.second.get_num());
    d = lcm(d, t.second.get_den());
  }
  if (n == 0) return 0;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

MPoly positive(const MPoly& p) {
  if (p.is_zero()) return p;
  return sgn(canonical_lead(p).second) < 0 ? -p : p;
}

MPoly primitive(const MPoly& p) {
  if (p.is_zero()) return p;
  Rational c = content(p);
  if (sgn(canonical_lead(p).second) < 0) c = -c;
  if (c == 1) return p;
  Rational inv = 1 / c;
  return p * inv;
}

Monomial monomial_content(const MPoly& p) {
  if (p.is_zero()) return Monomial();
  Monomial g = p.terms()[0].first;
  for (auto& t : p.terms()) {
    if (g.is_one()) break;
    g = gcd(g, t.first);
  }
  return g;
}

std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return MPoly();
  if (b.is_constant()) return a * Rational(1 / b.constant_term());
  for (auto& [v, e] : b.lead().first.factors())
    if (a.degree(v) < e) return std::nullopt;
  auto& [bm, bc] = b.lead();
  std::vector<MPoly::Term> q;
  MPoly r = a;
  while (!r.is_zero()) {
    auto& [rm, rc] = r.lead();
    if (!bm.divides(rm)) return std::nullopt;
    Monomial m = rm / bm;
    Rational c = rc / bc;
    r -= b.mul_term(m, c);
    q.emplace_back(std::move(m), std::move(c));
  }
  return MPoly::from_terms(std::move(q));
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("divide_exact: divisor does not divide");
  return *q;
}

namespace {

using UPoly = std::vector<MPoly>;  // coefficients in the main variable, index = power

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly prem(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  int db = udeg(b);
  const MPoly& lb = b.back();
  int e = udeg(a) - db + 1;
  while (!r.empty() && udeg(r) >= db) {
    MPoly lr = r.back();
    int s = udeg(r) - db;
    for (auto& c : r) c = c * lb;
    for (int i = 0; i <= db; ++i) r[i + s] -= lr * b[i];
    r.pop_back();
    trim(r);
    --e;
  }
  if (e > 0) {
    MPoly f = lb.pow(e);
    for (auto& c : r) c = c * f;
  }
  return r;
}

MPoly gcd_primitive(MPoly a, MPoly b);

MPoly gcd_many(const std::vector<MPoly>& ps) {
  MPoly g;
  for (auto& p : ps) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? primitive(p) : gcd_primitive(g, primitive(p));
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

MPoly content_in_primitive(const MPoly& p, VarId v) {
  if (!p.contains(v)) return primitive(p);
  auto cs = p.coefficients(v);
  // Smallest coefficients first gives early exits on coprime inputs.
  std::sort(cs.begin(), cs.end(), [](const MPoly& x, const MPoly& y) { return x.size() < y.size(); });
  return gcd_many(cs);
}

MPoly subresultant_gcd(const MPoly& pa, const MPoly& pb, VarId x) {
  UPoly A = pa.coefficients(x), B = pb.coefficients(x);
  if (udeg(A) < udeg(B)) std::swap(A, B);
  MPoly g(1), h(1);
  for (;;) {
    int delta = udeg(A) - udeg(B);
    UPoly R = prem(A, B);
    if (R.empty()) break;
    if (udeg(R) == 0) return MPoly(1);
    A = std::move(B);
    MPoly div = g * h.pow(delta);
    for (auto& c : R) c = divide_exact(c, div);
    B = std::move(R);
    g = A.back();
    if (delta == 0) {
    } else if (delta == 1) {
      h = g;
    } else {
      h = divide_exact(g.pow(delta), h.pow(delta - 1));
    }
  }
  MPoly r = MPoly::from_coefficients(x, B);
  return primitive(divide_exact(r, content_in_primitive(r, x)));
}

// Both arguments integer primitive; result primitive with positive canonical lead.
MPoly gcd_primitive(MPoly a, MPoly b) {
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  if (a == b) return positive(a);
  Monomial mg = gcd(monomial_content(a), monomial_content(b));
  if (a.is_monomial() || b.is_monomial()) return MPoly::monomial(mg, 1);
  {
    Monomial ma = monomial_content(a), mb = monomial_content(b);
    if (!ma.is_one()) a = divide_exact(a, MPoly::monomial(ma, 1));
    if (!mb.is_one()) b = divide_exact(b, MPoly::monomial(mb, 1));
  }
  auto finish = [&](const MPoly& g) { return primitive(g.mul_term(mg, 1)); };
  for (;;) {
    if (a.is_constant() || b.is_constant()) return finish(MPoly(1));
    auto va = a.variables(), vb = b.variables();
    bool changed = false;
    for (VarId v : va)
      if (!std::binary_search(vb.begin(), vb.end(), v)) {
        a = content_in_primitive(a, v);
        changed = true;
        break;
      }
    if (changed) continue;
    for (VarId v : vb)
      if (!std::binary_search(va.begin(), va.end(), v)) {
        b = content_in_primitive(b, v);
        changed = true;
        break;
      }
    if (!changed) break;
  }
  if (a.size() <= b.size()) {
    if (auto q = exact_divide(b, a)) return finish(a);
  } else if (auto q = exact_divide(a, b)) {
    return finish(b);
  }
  auto vars = a.variables();
  VarId x = vars[0];
  std::uint32_t best = ~0u;
  for (VarId v : vars) {
    std::uint32_t d = std::max(a.degree(v), b.degree(v));
    if (d < best) best = d, x = v;
  }
  MPoly ca = content_in_primitive(a, x), cb = content_in_primitive(b, x);
  MPoly pa = ca.is_constant() ? a : divide_exact(a, ca);
  MPoly pb = cb.is_constant() ? b : divide_exact(b, cb);
  MPoly cg = gcd_primitive(ca, cb);
  return finish(cg * subresultant_gcd(pa, pb, x));
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  Rational c = rational_gcd(content(a), content(b));
  return gcd_primitive(primitive(a), primitive(b)) * c;
}

MPoly lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  return positive(divide_exact(a * b, gcd(a, b)));
}

MPoly content_in(const MPoly& p, VarId v) {
  if (p.is_zero()) return p;
  return content_in_primitive(p, v) * content(p);
}

MPoly primitive_in(const MPoly& p, VarId v) {
  if (p.is_zero()) return p;
  return primitive(divide_exact(p, content_in(p, v)));
}

const MPoly::Term& leading_term(const MPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading_term of zero polynomial");
  const MPoly::Term* best = &p.terms()[0];
  for (auto& t : p.terms())
    if (order.compare(t.first, best->first) > 0) best = &t;
  return *best;
}

Division divide(const MPoly& p, const std::vector<MPoly>& divisors, const MonomialOrder& order) {
  Division d;
  d.quotients.assign(divisors.size(), MPoly());
  std::vector<MPoly::Term> leads;
  for (auto& g : divisors) {
    if (g.is_zero()) throw std::invalid_argument("divide: zero divisor");
    leads.push_back(leading_term(g, order));
  }
  MPoly rest = p;
  std::vector<MPoly::Term> rem;
  while (!rest.is_zero()) {
    MPoly::Term lt = leading_term(rest, order);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!leads[i].first.divides(lt.first)) continue;
      Monomial m = lt.first / leads[i].first;
      Rational c = lt.second / leads[i].second;
      d.quotients[i] += MPoly::monomial(m, c);
      rest -= divisors[i].mul_term(m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rest -= MPoly::monomial(lt.first, lt.second);
      rem.push_back(std::move(lt));
    }
  }
  d.remainder = MPoly::from_terms(std::move(rem));
  return d;
}

}  // namespace dalg
