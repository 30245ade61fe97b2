#include "dalg/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "dalg/errors.hpp"
#include "dalg/polyalg.hpp"

namespace dalg {
namespace {

// Monomials are int32 key rows whose lexicographic comparison is the
// monomial order. Keys are linear in the exponents, so monomial products
// are row sums. Lex blocks store exponents; grevlex blocks store the block
// degree followed by the negated exponents in reverse variable order.
struct Layout {
  std::vector<VarId> vars;
  std::vector<int> pos;   // key position of each local variable
  std::vector<int> sign;  // exponent = sign * key[pos]
  struct DegEntry {
    int pos;
    std::vector<int> vars;
  };
  std::vector<DegEntry> degs;
  int keylen = 0;

  explicit Layout(const MonomialOrder& order) {
    for (auto& b : order.blocks()) {
      int base = static_cast<int>(vars.size());
      int k = static_cast<int>(b.vars.size());
      vars.insert(vars.end(), b.vars.begin(), b.vars.end());
      pos.resize(vars.size());
      sign.resize(vars.size());
      if (b.kind == MonomialOrder::Kind::Lex) {
        for (int i = 0; i < k; ++i) pos[base + i] = keylen + i, sign[base + i] = 1;
        keylen += k;
      } else {
        DegEntry d{keylen, {}};
        for (int i = 0; i < k; ++i) {
          pos[base + i] = keylen + k - i;
          sign[base + i] = -1;
          d.vars.push_back(base + i);
        }
        degs.push_back(std::move(d));
        keylen += k + 1;
      }
    }
  }
  int nvars() const { return static_cast<int>(vars.size()); }
  int exp(const int32_t* key, int v) const { return sign[v] * key[pos[v]]; }
  int degree(const int32_t* key) const {
    int d = 0;
    for (int v = 0; v < nvars(); ++v) d += exp(key, v);
    return d;
  }
  bool divides(const int32_t* a, const int32_t* b) const {
    for (int v = 0; v < nvars(); ++v)
      if (exp(a, v) > exp(b, v)) return false;
    return true;
  }
  void set_exp(int32_t* key, int v, int e) const { key[pos[v]] = sign[v] * e; }
  void fix_degrees(int32_t* key) const {
    for (auto& d : degs) {
      int s = 0;
      for (int v : d.vars) s += exp(key, v);
      key[d.pos] = s;
    }
  }
  std::uint64_t mask(const int32_t* key) const {
    std::uint64_t m = 0;
    for (int v = 0; v < nvars(); ++v)
      if (exp(key, v) > 0) m |= std::uint64_t(1) << (v % 64);
    return m;
  }
};

int key_compare(const int32_t* a, const int32_t* b, int len) {
  for (int i = 0; i < len; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

// Terms sorted by descending monomial, integer coefficients.
struct GPoly {
  std::vector<int32_t> keys;
  std::vector<Integer> cf;
  std::uint64_t lead_mask = 0;
  int sugar = 0;  // degree the polynomial would have after homogenization
  std::size_t size() const { return cf.size(); }
  bool empty() const { return cf.empty(); }
  const int32_t* mono(std::size_t i, int len) const { return keys.data() + i * len; }
};

class Engine {
 public:
  Engine(const MonomialOrder& order, const GroebnerLimits& limits) : L_(order), K_(L_.keylen), limits_(limits) {
    for (int i = 0; i < L_.nvars(); ++i) local_.emplace(L_.vars[i], i);
  }

  GPoly from_mpoly(const MPoly& p) const {
    MPoly q = primitive(p);
    std::vector<std::pair<std::vector<int32_t>, Integer>> ts;
    for (auto& [m, c] : q.terms()) {
      std::vector<int32_t> key(K_, 0);
      for (auto& [v, e] : m.factors()) {
        auto it = local_.find(v);
        if (it == local_.end()) throw std::invalid_argument("monomial order does not cover " + var_info(v).name);
        L_.set_exp(key.data(), it->second, static_cast<int>(e));
      }
      L_.fix_degrees(key.data());
      ts.emplace_back(std::move(key), c.get_num());
    }
    std::sort(ts.begin(), ts.end(), [&](auto& a, auto& b) { return key_compare(a.first.data(), b.first.data(), K_) > 0; });
    GPoly g;
    for (auto& [k, c] : ts) {
      g.keys.insert(g.keys.end(), k.begin(), k.end());
      g.cf.push_back(c);
      g.sugar = std::max(g.sugar, L_.degree(k.data()));
    }
    finish(g);
    return g;
  }

  MPoly to_mpoly(const GPoly& g) const {
    std::vector<MPoly::Term> ts;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<Monomial::Factor> fs;
      const int32_t* k = g.mono(i, K_);
      for (int v = 0; v < L_.nvars(); ++v)
        if (int e = L_.exp(k, v)) fs.emplace_back(L_.vars[v], static_cast<std::uint32_t>(e));
      ts.emplace_back(Monomial(std::move(fs)), Rational(g.cf[i]));
    }
    return MPoly::from_terms(std::move(ts));
  }

  // a*A[sa..] (times monomial oa) + b*B[sb..] (times monomial ob).
  GPoly combine(const GPoly& A, const int32_t* oa, const Integer& a, std::size_t sa, const GPoly& B,
                const int32_t* ob, const Integer& b, std::size_t sb) const {
    GPoly r;
    r.keys.reserve((A.size() + B.size()) * K_);
    r.cf.reserve(A.size() + B.size());
    std::vector<int32_t> ka(K_), kb(K_);
    auto load = [&](const GPoly& P, const int32_t* off, std::size_t i, std::vector<int32_t>& out) {
      const int32_t* m = P.mono(i, K_);
      if (off)
        for (int t = 0; t < K_; ++t) out[t] = m[t] + off[t];
      else
        std::copy(m, m + K_, out.begin());
    };
    std::size_t i = sa, j = sb;
    if (i < A.size()) load(A, oa, i, ka);
    if (j < B.size()) load(B, ob, j, kb);
    Integer tmp;
    while (i < A.size() || j < B.size()) {
      int c = i == A.size() ? -1 : j == B.size() ? 1 : key_compare(ka.data(), kb.data(), K_);
      if (c > 0) {
        r.keys.insert(r.keys.end(), ka.begin(), ka.end());
        r.cf.push_back(a * A.cf[i]);
        if (++i < A.size()) load(A, oa, i, ka);
      } else if (c < 0) {
        r.keys.insert(r.keys.end(), kb.begin(), kb.end());
        r.cf.push_back(b * B.cf[j]);
        if (++j < B.size()) load(B, ob, j, kb);
      } else {
        tmp = a * A.cf[i] + b * B.cf[j];
        if (sgn(tmp) != 0) {
          r.keys.insert(r.keys.end(), ka.begin(), ka.end());
          r.cf.push_back(tmp);
        }
        if (++i < A.size()) load(A, oa, i, ka);
        if (++j < B.size()) load(B, ob, j, kb);
      }
    }
    if (limits_.max_work) {
      work_ += r.size() * (r.empty() ? 1 : 1 + mpz_size(r.cf[0].get_mpz_t()));
      if (work_ > limits_.max_work)
        throw ResourceCapError("Groebner work exceeds cap " + std::to_string(limits_.max_work));
    }
    return r;
  }

  void make_primitive(GPoly& g, std::vector<Integer>* extra = nullptr) const {
    Integer c = 0;
    for (auto& x : g.cf) {
      c = gcd(c, x);
      if (c == 1) break;
    }
    if (extra)
      for (auto& x : *extra) {
        if (c == 1) break;
        c = gcd(c, x);
      }
    if (c > 1) {
      for (auto& x : g.cf) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      if (extra)
        for (auto& x : *extra) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
  }

  void finish(GPoly& g) const {
    if (g.empty()) return;
    make_primitive(g);
    if (sgn(g.cf[0]) < 0)
      for (auto& x : g.cf) x = -x;
    g.lead_mask = L_.mask(g.mono(0, K_));
  }

  int find_reducer(const int32_t* m, std::uint64_t mask, const std::vector<int>& among) const {
    int best = -1;
    for (int idx : among) {
      const GPoly& g = polys_[idx];
      if (g.lead_mask & ~mask) continue;
      if (!L_.divides(g.mono(0, K_), m)) continue;
      if (best < 0 || g.size() < polys_[best].size()) best = idx;
    }
    return best;
  }

  // Fraction-free reduction; with top_only it stops at the first irreducible
  // leading term. The result is primitive.
  GPoly reduce(GPoly f, const std::vector<int>& among, bool top_only = false) const {
    GPoly res;
    std::vector<int32_t> off(K_);
    std::size_t head = 0;
    int steps = 0;
    while (head < f.size()) {
      const int32_t* m = f.mono(head, K_);
      int r = find_reducer(m, L_.mask(m), among);
      if (r < 0 && top_only) {
        finish(f);
        return f;
      }
      if (r < 0) {
        res.keys.insert(res.keys.end(), m, m + K_);
        res.cf.push_back(f.cf[head]);
        ++head;
        continue;
      }
      const GPoly& g = polys_[r];
      const int32_t* gm = g.mono(0, K_);
      for (int t = 0; t < K_; ++t) off[t] = m[t] - gm[t];
      Integer c = gcd(f.cf[head], g.cf[0]);
      Integer a = g.cf[0] / c, b = -(f.cf[head] / c);
      if (a < 0) a = -a, b = -b;
      int sugar = std::max(f.sugar, g.sugar + L_.degree(off.data()));
      f = combine(f, nullptr, a, head + 1, g, off.data(), b, 1);
      f.sugar = sugar;
      res.sugar = sugar;
      head = 0;
      if (a != 1)
        for (auto& x : res.cf) x *= a;
      if (++steps % 8 == 0) {
        // Keep coefficients small across long reductions.
        std::vector<Integer> all = res.cf;
        make_primitive(f, &all);
        res.cf = std::move(all);
      }
    }
    finish(res);
    return res;
  }

  GPoly spoly(int i, int j) const {
    const GPoly& f = polys_[i];
    const GPoly& g = polys_[j];
    std::vector<int32_t> l(K_), of(K_), og(K_);
    lcm_key(f.mono(0, K_), g.mono(0, K_), l.data());
    for (int t = 0; t < K_; ++t) of[t] = l[t] - f.mono(0, K_)[t], og[t] = l[t] - g.mono(0, K_)[t];
    Integer c = gcd(f.cf[0], g.cf[0]);
    Integer a = g.cf[0] / c, b = -(f.cf[0] / c);
    GPoly s = combine(f, of.data(), a, 1, g, og.data(), b, 1);
    s.sugar = std::max(f.sugar + L_.degree(of.data()), g.sugar + L_.degree(og.data()));
    return s;
  }

  void lcm_key(const int32_t* a, const int32_t* b, int32_t* out) const {
    std::fill(out, out + K_, 0);
    for (int v = 0; v < L_.nvars(); ++v) L_.set_exp(out, v, std::max(L_.exp(a, v), L_.exp(b, v)));
    L_.fix_degrees(out);
  }

  bool coprime(const int32_t* a, const int32_t* b) const {
    for (int v = 0; v < L_.nvars(); ++v)
      if (L_.exp(a, v) > 0 && L_.exp(b, v) > 0) return false;
    return true;
  }

  struct Pair {
    int i, j;
    std::vector<int32_t> lcm;
    int degree;
    int sugar;
  };

  int pair_sugar(int g, const int32_t* lcm) const {
    return polys_[g].sugar + L_.degree(lcm) - L_.degree(polys_[g].mono(0, K_));
  }

  void update(int h) {
    const int32_t* mh = polys_[h].mono(0, K_);
    struct Cand {
      int g;
      std::vector<int32_t> lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    for (int g : active_) {
      Cand c{g, std::vector<int32_t>(K_), false};
      lcm_key(mh, polys_[g].mono(0, K_), c.lcm.data());
      c.coprime = coprime(mh, polys_[g].mono(0, K_));
      C.push_back(std::move(c));
    }
    std::vector<Cand> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      auto& c1 = C[k];
      bool keep = c1.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < C.size() && keep; ++q)
          if (L_.divides(C[q].lcm.data(), c1.lcm.data())) keep = false;
        for (std::size_t q = 0; q < D.size() && keep; ++q)
          if (L_.divides(D[q].lcm.data(), c1.lcm.data())) keep = false;
      }
      if (keep) D.push_back(std::move(c1));
    }
    std::vector<Pair> kept;
    std::vector<int32_t> l1(K_), l2(K_);
    for (auto& p : pairs_) {
      bool drop = false;
      if (L_.divides(mh, p.lcm.data())) {
        lcm_key(polys_[p.i].mono(0, K_), mh, l1.data());
        lcm_key(polys_[p.j].mono(0, K_), mh, l2.data());
        drop = key_compare(l1.data(), p.lcm.data(), K_) != 0 && key_compare(l2.data(), p.lcm.data(), K_) != 0;
      }
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& c : D) {
      if (c.coprime) continue;
      int deg = L_.degree(c.lcm.data());
      int sugar = std::max(pair_sugar(c.g, c.lcm.data()), pair_sugar(h, c.lcm.data()));
      kept.push_back(Pair{std::min(c.g, h), std::max(c.g, h), std::move(c.lcm), deg, sugar});
    }
    pairs_ = std::move(kept);
    std::vector<int> na;
    for (int g : active_)
      if (!L_.divides(mh, polys_[g].mono(0, K_))) na.push_back(g);
    na.push_back(h);
    active_ = std::move(na);
    if (active_.size() > limits_.max_basis)
      throw ResourceCapError("Groebner basis size exceeds cap " + std::to_string(limits_.max_basis));
  }

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      auto& a = pairs_[k];
      auto& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      int c = key_compare(a.lcm.data(), b.lcm.data(), K_);
      if (c < 0 || (c == 0 && std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j))) best = k;
    }
    return best;
  }

  void add(GPoly g) {
    polys_.push_back(std::move(g));
    update(static_cast<int>(polys_.size()) - 1);
  }

  std::vector<GPoly> run(const std::vector<MPoly>& gens) {
    for (auto& p : gens) {
      if (p.is_zero()) continue;
      add(from_mpoly(p));
    }
    while (!pairs_.empty()) {
      std::size_t k = select();
      Pair p = std::move(pairs_[k]);
      pairs_.erase(pairs_.begin() + static_cast<long>(k));
      if (p.degree > static_cast<int>(limits_.max_degree))
        throw ResourceCapError("S-pair degree " + std::to_string(p.degree) + " exceeds cap " +
                               std::to_string(limits_.max_degree));
      // tail reduction here makes the coefficients explode; it is left to
      // the final inter-reduction
      GPoly h = reduce(spoly(p.i, p.j), active_, true);
      if (h.empty()) continue;
      add(std::move(h));
    }
    return reduced_basis();
  }

  std::vector<GPoly> reduced_basis() {
    std::vector<int> minimal;
    for (int g : active_) {
      bool redundant = false;
      for (int o : active_) {
        if (o == g) continue;
        const int32_t* mo = polys_[o].mono(0, K_);
        const int32_t* mg = polys_[g].mono(0, K_);
        if (L_.divides(mo, mg) && (key_compare(mo, mg, K_) != 0 || o < g)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(g);
    }
    for (int g : minimal) {
      std::vector<int> others;
      for (int o : minimal)
        if (o != g) others.push_back(o);
      polys_[g] = reduce(polys_[g], others);
    }
    std::vector<GPoly> out;
    for (int g : minimal) out.push_back(polys_[g]);
    std::sort(out.begin(), out.end(),
              [&](const GPoly& a, const GPoly& b) { return key_compare(a.mono(0, K_), b.mono(0, K_), K_) < 0; });
    return out;
  }

  // Normal form against an already reduced basis.
  GPoly normal_form(const GPoly& f, const std::vector<GPoly>& basis) {
    polys_ = basis;
    std::vector<int> all;
    for (int i = 0; i < static_cast<int>(polys_.size()); ++i) all.push_back(i);
    return reduce(f, all);
  }

  GPoly spoly_of(const GPoly& f, const GPoly& g) {
    polys_ = {f, g};
    return spoly(0, 1);
  }

 private:
  Layout L_;
  int K_;
  GroebnerLimits limits_;
  mutable std::size_t work_ = 0;
  std::unordered_map<VarId, int> local_;
  std::vector<GPoly> polys_;
  std::vector<int> active_;
  std::vector<Pair> pairs_;
};

MonomialOrder complete_order(const std::vector<MPoly>& gens, const MonomialOrder& order) {
  for (auto& g : gens)
    for (VarId v : g.variables())
      if (!order.covers(v)) throw std::invalid_argument("monomial order does not cover " + var_info(v).name);
  return order;
}

VarId fresh_aux(const MonomialOrder& order) {
  for (int i = 0;; ++i) {
    VarId t = aux_var("_t" + std::to_string(i));
    if (!order.covers(t)) return t;
  }
}

}  // namespace

IdealBasis buchberger(const std::vector<MPoly>& gens, const MonomialOrder& order, const GroebnerLimits& limits) {
  Engine e(complete_order(gens, order), limits);
  auto basis = e.run(gens);
  IdealBasis out{{}, order, true};
  for (auto& g : basis) out.generators.push_back(e.to_mpoly(g));
  return out;
}

IdealBasis saturate(const IdealBasis& basis, const MPoly& q, const GroebnerLimits& limits) {
  if (q.is_zero()) throw std::invalid_argument("saturate by zero");
  VarId t = fresh_aux(basis.order);
  MonomialOrder big = basis.order.with_leading_block({MonomialOrder::Kind::Lex, {t}});
  std::vector<MPoly> gens = basis.generators;
  gens.push_back(MPoly::var(t) * q - MPoly(1));
  IdealBasis full = buchberger(gens, big, limits);
  IdealBasis out{{}, basis.order, true};
  for (auto& g : full.generators)
    if (!g.contains(t)) out.generators.push_back(g);
  return out;
}

std::vector<MPoly> eliminate(const IdealBasis& basis, const std::vector<VarId>& keep) {
  if (!basis.is_groebner) throw std::invalid_argument("eliminate needs a Groebner basis");
  std::set<VarId> k(keep.begin(), keep.end());
  std::vector<VarId> elim;
  for (VarId v : basis.order.variables())
    if (!k.count(v)) elim.push_back(v);
  if (!basis.order.eliminates(elim)) throw std::invalid_argument("order is not an elimination order for the kept set");
  std::vector<MPoly> out;
  for (auto& g : basis.generators) {
    bool inside = true;
    for (VarId v : g.variables()) inside &= k.count(v) != 0;
    if (inside) out.push_back(g);
  }
  return out;
}

MPoly normal_form(const MPoly& p, const IdealBasis& basis) {
  if (!basis.is_groebner) throw std::invalid_argument("normal_form needs a Groebner basis");
  if (p.is_zero()) return p;
  Engine e(basis.order, {});
  std::vector<GPoly> gs;
  for (auto& g : basis.generators) gs.push_back(e.from_mpoly(g));
  return e.to_mpoly(e.normal_form(e.from_mpoly(p), gs));
}

bool membership(const MPoly& p, const IdealBasis& basis) { return normal_form(p, basis).is_zero(); }

MPoly s_polynomial(const MPoly& f, const MPoly& g, const MonomialOrder& order) {
  Engine e(order, {});
  return e.to_mpoly(e.spoly_of(e.from_mpoly(f), e.from_mpoly(g)));
}

bool satisfies_buchberger_criterion(const IdealBasis& basis) {
  Engine e(basis.order, {});
  std::vector<GPoly> gs;
  for (auto& g : basis.generators) gs.push_back(e.from_mpoly(g));
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      GPoly s = e.spoly_of(gs[i], gs[j]);
      if (!e.normal_form(s, gs).empty()) return false;
    }
  return true;
}

std::vector<MPoly> eliminate_saturated(const std::vector<MPoly>& gens, const MPoly& q,
                                       const std::vector<VarId>& elim, const std::vector<VarId>& keep,
                                       const GroebnerLimits& limits) {
  std::vector<VarId> block = elim;
  MonomialOrder probe = MonomialOrder::elimination(elim, keep);
  VarId t = fresh_aux(probe);
  block.insert(block.begin(), t);
  MonomialOrder order = MonomialOrder::elimination(block, keep);
  // factors of a generator that divide a power of q do not change I : q^inf
  std::vector<MPoly> all;
  for (MPoly g : gens) {
    if (!q.is_constant() && !g.is_zero())
      for (;;) {
        MPoly d = gcd(g, q);
        if (d.is_constant()) break;
        g = divide_exact(g, d);
      }
    all.push_back(std::move(g));
  }
  if (!q.is_constant()) all.push_back(MPoly::var(t) * q - MPoly(1));
  IdealBasis b = buchberger(all, order, limits);
  return eliminate(b, keep);
}

}  // namespace dalg
