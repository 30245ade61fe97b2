#include "dalg/implicit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "dalg/errors.hpp"
#include "dalg/polyalg.hpp"

namespace dalg {

namespace {

using u64 = std::uint64_t;

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

bool is_prime32(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7})
    if (n % q == 0) return n == q;
  u64 d = n - 1;
  int s = 0;
  while (!(d & 1)) d >>= 1, ++s;
  for (u64 a : {2, 7, 61}) {
    if (a % n == 0) continue;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s && comp; ++i) {
      x = x * x % n;
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

// Primes below 2^31, so a product of two residues fits in 64 bits.
struct Primes {
  u64 next = u64(1) << 31;
  u64 operator()() {
    do --next;
    while (!is_prime32(next));
    return next;
  }
};

struct Unlucky {};  // a denominator vanished modulo p

struct Field {
  u64 p;
  u64 inv(u64 a) const {
    if (a == 0) throw Unlucky{};
    return powmod(a, p - 2, p);
  }
  u64 of(const Rational& q) const {
    u64 n = mpz_fdiv_ui(q.get_num_mpz_t(), static_cast<unsigned long>(p));
    u64 d = mpz_fdiv_ui(q.get_den_mpz_t(), static_cast<unsigned long>(p));
    return n * inv(d) % p;
  }
};

// value plus gradient with respect to the starting point
struct Dual {
  u64 v = 0;
  std::vector<u64> d;
};

struct CPoly {
  struct Term {
    u64 c;
    std::vector<std::pair<int, unsigned>> f;  // slot, exponent
  };
  std::vector<Term> terms;

  CPoly(const MPoly& p, const Field& F, const std::function<int(VarId)>& slot) {
    for (auto& [m, c] : p.terms()) {
      Term t{F.of(c), {}};
      for (auto& [v, e] : m.factors()) t.f.emplace_back(slot(v), e);
      terms.push_back(std::move(t));
    }
  }

  u64 value(const std::vector<u64>& x, u64 p) const {
    u64 s = 0;
    for (auto& t : terms) {
      u64 v = t.c;
      for (auto [k, e] : t.f) v = v * powmod(x[k], e, p) % p;
      s = (s + v) % p;
    }
    return s;
  }

  Dual dual(const std::vector<Dual>& x, u64 p, std::size_t M) const {
    Dual s{0, std::vector<u64>(M, 0)};
    for (auto& t : terms) {
      // c * prod x^e and its gradient sum c e x^(e-1) prod(others) dx
      u64 v = t.c;
      std::vector<u64> pw;
      for (auto [k, e] : t.f) {
        pw.push_back(powmod(x[k].v, e, p));
        v = v * pw.back() % p;
      }
      s.v = (s.v + v) % p;
      for (std::size_t i = 0; i < t.f.size(); ++i) {
        auto [k, e] = t.f[i];
        u64 g = t.c * (e % p) % p * powmod(x[k].v, e - 1, p) % p;
        for (std::size_t j = 0; j < t.f.size(); ++j)
          if (j != i) g = g * pw[j] % p;
        if (g == 0) continue;
        for (std::size_t a = 0; a < M; ++a) s.d[a] = (s.d[a] + g * x[k].d[a]) % p;
      }
    }
    return s;
  }
};

int max_shift(const RatExpr& r) {
  int k = 0;
  for (auto* p : {&r.num(), &r.den()})
    for (VarId v : p->variables()) k = std::max(k, var_info(v).shift);
  return k;
}

class Orbit {
 public:
  Orbit(const RationalOrbit& o, const Field& F) : F_(F), M_(o.states.size()), kmax_(max_shift(o.output)) {
    std::map<VarId, int> index;
    for (std::size_t i = 0; i < M_; ++i) index[o.states[i]] = static_cast<int>(i);
    auto at = [&](VarId v) -> int {
      const auto& in = var_info(v);
      auto it = index.find(seq_var(in.seq, 0));
      if (in.kind != VarKind::Seq || it == index.end())
        throw std::invalid_argument("orbit expression uses a non-state variable " + in.name);
      return in.shift * static_cast<int>(M_) + it->second;
    };
    for (auto& r : o.next) {
      nn_.emplace_back(r.num(), F, at);
      nd_.emplace_back(r.den(), F, at);
    }
    on_.emplace_back(o.output.num(), F, at);
    od_.emplace_back(o.output.den(), F, at);
  }

  // z_0..z_{count-1} at the point w
  std::vector<u64> values(const std::vector<u64>& w, int count) const {
    u64 p = F_.p;
    std::vector<u64> traj(w);
    std::vector<u64> s(w);
    for (int t = 1; t < count + kmax_; ++t) {
      std::vector<u64> n(M_);
      for (std::size_t i = 0; i < M_; ++i) n[i] = nn_[i].value(s, p) * F_.inv(nd_[i].value(s, p)) % p;
      traj.insert(traj.end(), n.begin(), n.end());
      s = std::move(n);
    }
    std::vector<u64> z(count);
    for (int j = 0; j < count; ++j) {
      std::vector<u64> x(traj.begin() + static_cast<long>(j * M_), traj.begin() + static_cast<long>((j + kmax_ + 1) * M_));
      z[j] = on_[0].value(x, p) * F_.inv(od_[0].value(x, p)) % p;
    }
    return z;
  }

  std::vector<Dual> duals(const std::vector<u64>& w, int count) const {
    u64 p = F_.p;
    auto quot = [&](const Dual& a, const Dual& b) {
      u64 ib = F_.inv(b.v);
      Dual r{a.v * ib % p, std::vector<u64>(M_)};
      // (a' b - a b') / b^2
      u64 ib2 = ib * ib % p;
      for (std::size_t k = 0; k < M_; ++k) r.d[k] = (a.d[k] * b.v % p + p - a.v * b.d[k] % p) % p * ib2 % p;
      return r;
    };
    std::vector<Dual> s(M_);
    for (std::size_t i = 0; i < M_; ++i) {
      s[i].v = w[i];
      s[i].d.assign(M_, 0);
      s[i].d[i] = 1;
    }
    std::vector<Dual> traj(s);
    for (int t = 1; t < count + kmax_; ++t) {
      std::vector<Dual> n;
      for (std::size_t i = 0; i < M_; ++i) n.push_back(quot(nn_[i].dual(s, p, M_), nd_[i].dual(s, p, M_)));
      traj.insert(traj.end(), n.begin(), n.end());
      s = std::move(n);
    }
    std::vector<Dual> z;
    for (int j = 0; j < count; ++j) {
      std::vector<Dual> x(traj.begin() + static_cast<long>(j * M_), traj.begin() + static_cast<long>((j + kmax_ + 1) * M_));
      z.push_back(quot(on_[0].dual(x, p, M_), od_[0].dual(x, p, M_)));
    }
    return z;
  }

 private:
  Field F_;
  std::size_t M_;
  int kmax_;
  std::vector<CPoly> nn_, nd_, on_, od_;
};

std::size_t rank_mod(std::vector<std::vector<u64>> a, u64 p) {
  std::size_t r = 0;
  std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    u64 iv = powmod(a[r][c], p - 2, p);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      u64 f = (p - a[i][c]) * iv % p;
      for (std::size_t k = c; k < cols; ++k) a[i][k] = (a[i][k] + f * a[r][k]) % p;
    }
    ++r;
  }
  return r;
}

// Kernel of the sample matrix when it is one-dimensional, else its dimension.
struct Kernel {
  std::size_t dim = 0;
  std::vector<u64> v;
};

Kernel kernel_mod(std::vector<std::vector<u64>> a, std::size_t cols, u64 p) {
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    u64 iv = powmod(a[r][c], p - 2, p);
    for (std::size_t k = c; k < cols; ++k) a[r][k] = a[r][k] * iv % p;
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      u64 x = a[i][c];
      if (x == 0) continue;
      u64 f = p - x;
      u64* dst = a[i].data();
      const u64* src = a[r].data();
      for (std::size_t k = c; k < cols; ++k) dst[k] = (dst[k] + f * src[k]) % p;
    }
    pivcol.push_back(c);
    ++r;
  }
  Kernel K;
  K.dim = cols - r;
  if (K.dim != 1) return K;
  std::size_t free = 0;
  for (std::size_t c = 0, i = 0; c < cols; ++c) {
    if (i < pivcol.size() && pivcol[i] == c) {
      ++i;
      continue;
    }
    free = c;
  }
  K.v.assign(cols, 0);
  K.v[free] = 1;
  for (std::size_t i = r; i-- > 0;) {
    std::size_t c = pivcol[i];
    u64 s = 0;
    for (std::size_t k = c + 1; k < cols; ++k) s = (s + a[i][k] * K.v[k]) % p;
    K.v[c] = (p - s) % p;
  }
  return K;
}

std::vector<std::vector<unsigned>> monomials(std::size_t nv, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(nv, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == nv) {
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, d);
  return out;
}

// Wang's rational reconstruction of a mod m with |num|, den <= sqrt(m/2).
bool reconstruct(const Integer& a, const Integer& m, Rational& out) {
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1, r1 = r2, t0 = t1, t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  Integer g = gcd(r1, t1);
  if (g != 1) return false;
  out = Rational(r1, t1);
  out.canonicalize();
  return true;
}

class Search {
 public:
  Search(const RationalOrbit& o, const RelationLimits& lim) : o_(o), lim_(lim), rng_(lim.seed) {}

  std::vector<u64> point(u64 p) {
    std::uniform_int_distribution<u64> d(1, p - 1);
    std::vector<u64> w(o_.states.size());
    for (auto& x : w) x = d(rng_);
    return w;
  }

  int order(const Field& F) {
    Orbit orb(o_, F);
    int M = static_cast<int>(o_.states.size());
    std::vector<std::size_t> best(M + 1, 0);
    for (int trial = 0, good = 0; good < 2 && trial < 50; ++trial) {
      std::vector<Dual> z;
      try {
        z = orb.duals(point(F.p), M + 1);
      } catch (Unlucky&) {
        continue;
      }
      ++good;
      std::vector<std::vector<u64>> rows;
      for (int k = 0; k <= M; ++k) {
        rows.push_back(z[k].d);
        best[k] = std::max(best[k], rank_mod(rows, F.p));
      }
    }
    for (int k = 0; k <= M; ++k)
      if (best[k] <= static_cast<std::size_t>(k)) return k;
    throw InternalError("orbit of " + std::to_string(M) + " states has independent outputs beyond its dimension");
  }

  // sample rows of the ansatz for monomials mons in z_0..z_k
  std::vector<std::vector<u64>> rows(const Field& F, int k, const std::vector<std::vector<unsigned>>& mons,
                                     std::size_t count) {
    Orbit orb(o_, F);
    unsigned d = 0;
    for (auto& m : mons)
      for (auto e : m) d = std::max(d, e);
    std::vector<std::vector<u64>> out;
    for (std::size_t tries = 0; out.size() < count; ++tries) {
      if (tries > 4 * count + 50) throw InternalError("orbit denominators vanish at almost every sample");
      std::vector<u64> z;
      try {
        z = orb.values(point(F.p), k + 1);
      } catch (Unlucky&) {
        continue;
      }
      std::vector<std::vector<u64>> pw(k + 1, std::vector<u64>(d + 1, 1));
      for (int i = 0; i <= k; ++i)
        for (unsigned e = 1; e <= d; ++e) pw[i][e] = pw[i][e - 1] * z[i] % F.p;
      std::vector<u64> row;
      row.reserve(mons.size());
      for (auto& m : mons) {
        u64 v = 1;
        for (int i = 0; i <= k; ++i) v = v * pw[i][m[i]] % F.p;
        row.push_back(v);
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  // one-dimensional kernel at this prime, or dim reported
  Kernel kernel(const Field& F, int k, const std::vector<std::vector<unsigned>>& mons) {
    for (int attempt = 0; attempt < 3; ++attempt) {
      Kernel K = kernel_mod(rows(F, k, mons, mons.size() + 6), mons.size(), F.p);
      if (K.dim <= 1) return K;
    }
    Kernel K;
    K.dim = 2;
    return K;
  }

  bool exact_check(const MPoly& P, const std::vector<VarId>& z, int k) {
    std::uniform_int_distribution<long> d(-(1L << 30), 1L << 30);
    int M = static_cast<int>(o_.states.size());
    int kmax = max_shift(o_.output);
    int done = 0;
    for (int trial = 0; done < 3 && trial < 30; ++trial) {
      std::map<VarId, Rational> s;
      for (auto w : o_.states) s[w] = Rational(d(rng_));
      std::vector<std::map<VarId, Rational>> traj{s};
      bool bad = false;
      for (int t = 1; t < k + 1 + kmax && !bad; ++t) {
        std::map<VarId, Rational> n;
        for (int i = 0; i < M; ++i) {
          Rational den = o_.next[i].den().evaluate(s);
          if (sgn(den) == 0) {
            bad = true;
            break;
          }
          n[o_.states[i]] = o_.next[i].num().evaluate(s) / den;
        }
        s = n;
        traj.push_back(std::move(n));
      }
      if (bad) continue;
      std::map<VarId, Rational> zv;
      for (int j = 0; j <= k && !bad; ++j) {
        std::map<VarId, Rational> x;
        for (int t = 0; t <= kmax; ++t)
          for (auto w : o_.states) x[shifted(w, t)] = traj[j + t].at(w);
        Rational den = o_.output.den().evaluate(x);
        if (sgn(den) == 0) bad = true;
        else zv[z[j]] = o_.output.num().evaluate(x) / den;
      }
      if (bad) continue;
      if (sgn(P.evaluate(zv)) != 0) return false;
      ++done;
    }
    if (done == 0) throw InternalError("orbit denominators vanish at every rational sample");
    return true;
  }

 private:
  const RationalOrbit& o_;
  RelationLimits lim_;
  std::mt19937_64 rng_;
};

}  // namespace

std::optional<MPoly> orbit_relation(const RationalOrbit& orbit, const std::vector<VarId>& z,
                                    const RelationLimits& limits) {
  if (orbit.next.size() != orbit.states.size()) throw std::invalid_argument("orbit needs one map per state");
  if (z.size() < orbit.states.size() + 1) throw std::invalid_argument("orbit needs dimension + 1 output names");
  Search S(orbit, limits);
  Primes primes;
  Field F{primes()};
  int k = S.order(F);
  std::vector<std::vector<unsigned>> mons;
  Kernel K;
  for (unsigned d = 1;; ++d) {
    if (d > limits.max_degree) return std::nullopt;
    mons = monomials(k + 1, d);
    if (mons.size() > limits.max_unknowns) return std::nullopt;
    K = S.kernel(F, k, mons);
    if (K.dim == 1) break;
    if (K.dim > 1) throw InternalError("relation ideal is not principal at the lowest order");
  }
  // normalize at the last monomial in the support; CRT over further primes
  std::size_t anchor = mons.size();
  while (anchor-- > 0 && K.v[anchor] == 0) {
  }
  std::vector<Integer> res(mons.size());
  Integer mod = F.p;
  auto absorb = [&](const Kernel& ker, u64 p, bool first) {
    u64 s = powmod(ker.v[anchor], p - 2, p);
    for (std::size_t i = 0; i < mons.size(); ++i) {
      u64 v = ker.v[i] * s % p;
      if (first) {
        res[i] = static_cast<unsigned long>(v);
        continue;
      }
      // res + mod * ((v - res) / mod mod p)
      u64 r = mpz_fdiv_ui(res[i].get_mpz_t(), static_cast<unsigned long>(p));
      u64 im = powmod(mpz_fdiv_ui(mod.get_mpz_t(), static_cast<unsigned long>(p)), p - 2, p);
      u64 t = (v + p - r) % p * im % p;
      res[i] += mod * static_cast<unsigned long>(t);
    }
    if (!first) mod *= static_cast<unsigned long>(p);
  };
  absorb(K, F.p, true);
  std::vector<Rational> prev;
  for (int round = 0; round < 400; ++round) {
    std::vector<Rational> cur(mons.size());
    bool ok = true;
    for (std::size_t i = 0; i < mons.size() && ok; ++i) ok = reconstruct(res[i], mod, cur[i]);
    if (ok && cur == prev) {
      std::vector<MPoly::Term> ts;
      for (std::size_t i = 0; i < mons.size(); ++i) {
        if (sgn(cur[i]) == 0) continue;
        std::vector<Monomial::Factor> fs;
        for (int j = 0; j <= k; ++j)
          if (mons[i][j]) fs.emplace_back(z[j], mons[i][j]);
        ts.emplace_back(Monomial(std::move(fs)), cur[i]);
      }
      MPoly P = primitive(MPoly::from_terms(std::move(ts)));
      if (S.exact_check(P, z, k)) return P;
    }
    if (ok) prev = cur;
    Field G{primes()};
    Kernel L = S.kernel(G, k, mons);
    if (L.dim != 1 || L.v[anchor] == 0) continue;  // unlucky prime
    bool beyond = false;
    for (std::size_t i = anchor + 1; i < mons.size(); ++i) beyond |= L.v[i] != 0;
    if (beyond) continue;
    absorb(L, G.p, false);
  }
  throw InternalError("relation coefficients did not stabilize");
}

}  // namespace dalg
