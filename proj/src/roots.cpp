#include <algorithm>
#include <stdexcept>

#include "dalg/seqeval.hpp"

namespace dalg {
namespace {

using ZPoly = std::vector<Integer>;  // index = power
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly qrem(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t s = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + s] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

QPoly qquo(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t s = a.size() - b.size();
    q[s] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + s] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

QPoly qgcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ZPoly primitive_z(const QPoly& p) {
  Integer den = 1, g = 0;
  for (auto& c : p) den = lcm(den, c.get_den());
  ZPoly z;
  for (auto& c : p) {
    Integer v = c.get_num() * (den / c.get_den());
    g = gcd(g, v);
    z.push_back(v);
  }
  if (g > 1)
    for (auto& v : z) v /= g;
  return z;
}

unsigned long eval_mod(const ZPoly& f, unsigned long x, unsigned long p) {
  unsigned long r = 0;
  for (std::size_t i = f.size(); i-- > 0;) {
    unsigned long c = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    r = static_cast<unsigned long>((static_cast<unsigned __int128>(r) * x + c) % p);
  }
  return r;
}

Integer eval_z(const ZPoly& f, const Integer& x, const Integer& m) {
  Integer r = 0;
  for (std::size_t i = f.size(); i-- > 0;) {
    r = r * x + f[i];
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  }
  return r;
}

ZPoly derivative(const ZPoly& f) {
  ZPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  return d;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// True when f mod p keeps its degree and stays squarefree.
bool good_prime(const ZPoly& f, unsigned long p) {
  if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) return false;
  auto red = [p](const ZPoly& g) {
    std::vector<unsigned long> r;
    for (auto& c : g) r.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  };
  auto inv = [p](unsigned long a) {
    Integer r, A(a), P(p);
    mpz_invert(r.get_mpz_t(), A.get_mpz_t(), P.get_mpz_t());
    return r.get_ui();
  };
  auto a = red(f), b = red(derivative(f));
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      unsigned long q = static_cast<unsigned long>(static_cast<unsigned __int128>(a.back()) * inv(b.back()) % p);
      std::size_t s = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[i + s] = static_cast<unsigned long>((a[i + s] + p - static_cast<unsigned __int128>(q) * b[i] % p) % p);
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return a.size() == 1;
}

bool is_root(const ZPoly& f, const Integer& a, const Integer& b) {
  // sum f_i a^i b^(d-i)
  Integer s = 0, ap = 1;
  std::size_t d = f.size() - 1;
  std::vector<Integer> bp(d + 1, 1);
  for (std::size_t i = 1; i <= d; ++i) bp[i] = bp[i - 1] * b;
  for (std::size_t i = 0; i <= d; ++i) {
    s += f[i] * ap * bp[d - i];
    ap *= a;
  }
  return s == 0;
}

// Distinct rational roots of a squarefree primitive polynomial with f(0) != 0.
std::vector<Rational> distinct_roots(const ZPoly& f) {
  std::vector<Rational> out;
  if (f.size() <= 1) return out;
  if (f.size() == 2) {
    Rational r(-f[0], f[1]);
    r.canonicalize();
    out.push_back(r);
    return out;
  }
  Integer A = abs(f[0]), B = abs(f.back());
  Integer bound = 2 * A * B + 1;
  unsigned long p = 1009;
  while (!(is_prime(p) && good_prime(f, p))) ++p;
  ZPoly df = derivative(f);
  for (unsigned long r0 = 0; r0 < p; ++r0) {
    if (eval_mod(f, r0, p) != 0) continue;
    Integer r = r0, m = p;
    while (m <= bound) {
      Integer m2 = m * m;
      Integer fv = eval_z(f, r, m2), dv = eval_z(df, r, m2), inv;
      mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m2.get_mpz_t());
      r = r - fv * inv;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m2.get_mpz_t());
      m = m2;
    }
    // Rational reconstruction with |a| <= A, 0 < b <= B.
    Integer r_0 = m, r_1 = r, t_0 = 0, t_1 = 1;
    while (abs(r_1) > A) {
      Integer q = r_0 / r_1;
      Integer r2 = r_0 - q * r_1, t2 = t_0 - q * t_1;
      r_0 = r_1, r_1 = r2, t_0 = t_1, t_1 = t2;
    }
    Integer a = r_1, b = t_1;
    if (b < 0) a = -a, b = -b;
    if (b == 0 || b > B || gcd(a, b) != 1) continue;
    if (is_root(f, a, b)) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  QPoly q = coeffs;
  trim(q);
  if (q.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rational> out;
  std::size_t zeros = 0;
  while (sgn(q[zeros]) == 0) ++zeros;
  q.erase(q.begin(), q.begin() + static_cast<long>(zeros));
  out.insert(out.end(), zeros, Rational(0));
  if (q.size() > 1) {
    QPoly dq;
    for (std::size_t i = 1; i < q.size(); ++i) dq.push_back(q[i] * static_cast<unsigned long>(i));
    QPoly g = qgcd(q, dq);
    QPoly sqf = g.size() > 1 ? qquo(q, g) : q;
    ZPoly f = primitive_z(q);
    for (auto& r : distinct_roots(primitive_z(sqf))) {
      // Multiplicity by repeated exact division with (b x - a).
      QPoly cur(f.begin(), f.end()), lin{-r, 1};
      while (cur.size() > 1 && qrem(cur, lin).empty()) {
        out.push_back(r);
        cur = qquo(cur, lin);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> rational_roots(const MPoly& q) {
  auto vs = q.variables();
  if (vs.size() > 1) throw std::invalid_argument("rational_roots needs a univariate polynomial");
  if (q.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  if (vs.empty()) return {};
  auto cs = q.coefficients(vs[0]);
  std::vector<Rational> c;
  for (auto& x : cs) c.push_back(x.constant_term());
  return rational_roots(c);
}

}  // namespace dalg
