#include "dalg/seqeval.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dalg/errors.hpp"

namespace dalg {

RootPolicy parse_root_policy(std::string_view name) {
  if (name == "unique") return RootPolicy::Unique;
  if (name == "positive-discriminant") return RootPolicy::PositiveDiscriminant;
  if (name == "smallest") return RootPolicy::Smallest;
  if (name == "largest") return RootPolicy::Largest;
  if (name == "by-predicate") return RootPolicy::ByPredicate;
  throw std::invalid_argument("unknown root policy '" + std::string(name) + "'");
}

TermTable TermTable::from_rationals(int start, const std::vector<Rational>& values) {
  TermTable t;
  t.start = start;
  for (auto& v : values) t.terms.emplace_back(v);
  t.notes.assign(values.size(), "given");
  return t;
}

namespace {

struct Prepared {
  const DiffPoly* p;
  int order;
  VarId top;
  std::vector<MPoly> coeffs;  // in the top variable
};

Prepared prepare(const DiffPoly& p, std::string_view seq) {
  int r = order_in(p, seq);
  if (r < 0) throw std::invalid_argument("polynomial does not involve sequence " + std::string(seq));
  for (auto& s : p.sequences())
    if (s != seq) throw std::invalid_argument("polynomial involves a second sequence " + s);
  Prepared pr{&p, r, seq_var(seq, r), {}};
  pr.coeffs = p.body().coefficients(pr.top);
  return pr;
}

std::map<VarId, Coefficient> window(const Prepared& pr, const TermTable& t, int pos, std::string_view seq,
                                    int upto) {
  std::map<VarId, Coefficient> a;
  for (int k = 0; k < upto; ++k) a.emplace(seq_var(seq, k), t.at(pos + k));
  a.emplace(index_var(), Coefficient(pos));
  (void)pr;
  return a;
}

Rational pick_root(const std::vector<Rational>& coeffs, const RootChoice& rc, int index, std::string* note) {
  auto roots = rational_roots(coeffs);
  std::vector<Rational> distinct = roots;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::string where = " for term " + std::to_string(index);
  if (distinct.empty()) throw DegenerateError("no rational root" + where);
  std::vector<Rational> ok;
  switch (rc.policy) {
    case RootPolicy::Unique:
      ok = distinct;
      break;
    case RootPolicy::Smallest:
      ok = {distinct.front()};
      break;
    case RootPolicy::Largest:
      ok = {distinct.back()};
      break;
    case RootPolicy::PositiveDiscriminant: {
      std::size_t deg = coeffs.size() - 1;
      while (deg > 0 && sgn(coeffs[deg]) == 0) --deg;
      if (deg != 2) throw DegenerateError("positive-discriminant policy needs a quadratic step" + where);
      // The root (-b + sqrt(D)) / (2a) is the one with 2a r + b >= 0.
      for (auto& r : distinct)
        if (sgn(2 * coeffs[2] * r + coeffs[1]) >= 0) ok.push_back(r);
      break;
    }
    case RootPolicy::ByPredicate:
      if (!rc.predicate) throw std::invalid_argument("by-predicate policy without predicate");
      for (auto& r : distinct)
        if (rc.predicate(r)) ok.push_back(r);
      break;
  }
  if (ok.size() != 1)
    throw DegenerateError(std::to_string(ok.size()) + " admissible rational roots" + where +
                          (rc.policy == RootPolicy::Unique ? "; choose a root policy" : ""));
  if (note) *note = "root " + ok[0].get_str() + " of " + std::to_string(distinct.size());
  return ok[0];
}

Coefficient step(const Prepared& pr, const TermTable& t, int m, const SeqSpec& spec, std::string* note) {
  int pos = m - pr.order;
  if (pos < t.start) throw std::invalid_argument("not enough initial terms for term " + std::to_string(m));
  auto a = window(pr, t, pos, spec.seq, pr.order);
  std::vector<Coefficient> c;
  for (auto& cp : pr.coeffs) c.push_back(evaluate(cp, a));
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  std::string at = " at position " + std::to_string(pos) + " (term " + std::to_string(m) + ")";
  if (c.empty()) throw DegenerateError("defining polynomial vanishes identically" + at + ": term undetermined");
  if (c.size() == 1) throw DegenerateError("initial vanishes" + at + ": regularity breach");
  if (c.size() < pr.coeffs.size()) *note = "initial vanished, degree dropped; ";
  if (c.size() == 2) {
    *note += "linear";
    return -c[0] / c[1];
  }
  std::vector<Rational> q;
  for (auto& x : c) {
    if (!x.is_rational()) throw DegenerateError("non-rationalizing step with symbolic coefficients" + at);
    q.push_back(x.rational());
  }
  std::string rn;
  Rational r = pick_root(q, spec.roots, m, &rn);
  *note += rn;
  return Coefficient(r);
}

bool vanishes(const Prepared& pr, const TermTable& t, int pos, std::string_view seq) {
  auto a = window(pr, t, pos, seq, pr.order + 1);
  return evaluate(pr.p->body(), a).is_zero();
}

}  // namespace

TermTable unroll(const SeqSpec& spec, int count) {
  if (spec.factors.empty()) throw std::invalid_argument("unroll: no defining polynomial");
  std::vector<Prepared> prs;
  for (auto& f : spec.factors) prs.push_back(prepare(f, spec.seq));
  int maxord = 0;
  for (auto& p : prs) maxord = std::max(maxord, p.order);
  TermTable t;
  t.start = spec.start;
  t.terms = spec.initial;
  t.notes.assign(t.terms.size(), "initial");
  int first = t.end();
  int k = static_cast<int>(prs.size());
  while (t.size() < count) {
    int m = t.end();
    int j = (m - first) % k;
    std::string note;
    Coefficient v = step(prs[j], t, m, spec, &note);
    t.terms.push_back(v);
    t.notes.push_back(k > 1 ? "factor " + std::to_string(j) + ": " + note : note);
  }
  if (k > 1) {
    // Exactly one factor vanishes at every fully known position.
    for (int pos = t.start; pos + maxord < t.end(); ++pos) {
      int hits = 0;
      for (auto& p : prs) hits += vanishes(p, t, pos, spec.seq);
      if (hits != 1)
        throw DegenerateError("polymorphic ambiguity at position " + std::to_string(pos) + ": " +
                              std::to_string(hits) + " factors vanish");
    }
  }
  return t;
}

namespace {

// Powers of one term's numerator and denominator, split as 2^k times an odd
// part; multiplying by a power of two is a shift. A term sits in several
// windows, so verify keeps them across positions.
struct Powers {
  Integer n, d;  // odd parts
  unsigned long a = 0, b = 0;
  std::vector<Integer> npow{Integer(1)}, dpow{Integer(1)};
  Powers() = default;
  Powers(const Integer& num, const Integer& den) : n(num), d(den) {
    if (sgn(n) != 0) {
      a = mpz_scan1(n.get_mpz_t(), 0);
      mpz_tdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), a);
    }
    b = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), b);
  }
  static const Integer& power(std::vector<Integer>& chain, const Integer& x, unsigned e) {
    // halves multiply as one operand when equal, which is a squaring
    while (chain.size() <= e) {
      std::size_t k = chain.size();
      chain.push_back(k == 1 ? x : chain[k / 2] * chain[k - k / 2]);
    }
    return chain[e];
  }
  std::size_t bits() const { return mpz_sizeinbase(n.get_mpz_t(), 2) + mpz_sizeinbase(d.get_mpz_t(), 2); }
};

// Zero test for rational assignments with all denominators cleared at once:
// sum of c * prod N^e * D^(E-e), evaluated Horner-style one variable at a
// time, largest values outermost. No gcds on the (possibly huge) operands.
struct ClearedEval {
  struct Var {
    VarId id;
    unsigned top;
    Powers* pw;
    // odd part and shift of n^e * d^(top-e)
    mutable std::map<unsigned, std::pair<Integer, unsigned long>> factor;
    const std::pair<Integer, unsigned long>& at(unsigned e) const {
      auto it = factor.find(e);
      if (it != factor.end()) return it->second;
      const Integer& x = Powers::power(pw->npow, pw->n, e);
      const Integer& y = Powers::power(pw->dpow, pw->d, top - e);
      Integer odd = y == 1 ? x : x == 1 ? y : x * y;
      return factor.emplace(e, std::pair{std::move(odd), pw->a * e + pw->b * (top - e)}).first->second;
    }
    std::size_t bits() const { return top * pw->bits(); }
  };
  std::vector<Var> vars;
  std::vector<std::pair<std::vector<unsigned>, Integer>> terms;  // exponents in vars order

  Integer eval(std::size_t lo, std::size_t hi, std::size_t k) const {
    if (k == vars.size()) {
      Integer s = 0;
      for (std::size_t i = lo; i < hi; ++i) s += terms[i].second;
      return s;
    }
    const Var& v = vars[k];
    Integer s = 0;
    for (std::size_t i = lo; i < hi;) {
      unsigned e = terms[i].first[k];
      std::size_t j = i;
      while (j < hi && terms[j].first[k] == e) ++j;
      Integer g = eval(i, j, k + 1);
      const auto& [odd, shift] = v.at(e);
      if (odd != 1) g *= odd;
      if (shift) mpz_mul_2exp(g.get_mpz_t(), g.get_mpz_t(), shift);
      s += g;
      i = j;
    }
    return s;
  }
};

bool vanishes_rational(const MPoly& p, const std::map<VarId, Powers*>& a) {
  ClearedEval ce;
  for (VarId v : p.variables()) ce.vars.push_back(ClearedEval::Var{v, p.degree(v), a.at(v), {}});
  std::sort(ce.vars.begin(), ce.vars.end(), [&](const auto& x, const auto& y) { return x.bits() > y.bits(); });
  Integer L = 1;
  for (auto& [m, c] : p.terms()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den().get_mpz_t());
  for (auto& [m, c] : p.terms()) {
    std::vector<unsigned> ex;
    for (auto& v : ce.vars) ex.push_back(m.degree(v.id));
    ce.terms.emplace_back(std::move(ex), L / c.get_den() * c.get_num());
  }
  std::sort(ce.terms.begin(), ce.terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return sgn(ce.eval(0, ce.terms.size(), 0)) == 0;
}

bool all_rational(const std::map<VarId, Coefficient>& a) {
  return std::all_of(a.begin(), a.end(), [](const auto& kv) { return kv.second.is_rational(); });
}

}  // namespace

Verdict verify(const DiffPoly& p, const TermTable& terms, std::string_view seq) {
  Prepared pr = prepare(p, seq);
  if (terms.size() < pr.order + 1) throw std::invalid_argument("verify: window too short");
  Verdict v;
  bool params = false;
  for (VarId x : p.body().variables()) params |= is_param(x);
  std::map<int, Powers> cache;
  for (int pos = terms.start; pos + pr.order < terms.end(); ++pos) {
    auto a = window(pr, terms, pos, seq, pr.order + 1);
    if (!params && all_rational(a)) {
      while (!cache.empty() && cache.begin()->first < pos) cache.erase(cache.begin());
      std::map<VarId, Powers*> w;
      for (int k = 0; k <= pr.order; ++k) {
        auto it = cache.find(pos + k);
        if (it == cache.end()) {
          const Rational& q = terms.at(pos + k).rational();
          it = cache.emplace(pos + k, Powers(q.get_num(), q.get_den())).first;
        }
        w[seq_var(seq, k)] = &it->second;
      }
      Powers index(Integer(pos), Integer(1));
      w[index_var()] = &index;
      if (vanishes_rational(p.body(), w)) {
        ++v.positions;
        continue;
      }
    }
    Coefficient r = evaluate(p.body(), a);
    ++v.positions;
    if (!r.is_zero()) {
      v.ok = false;
      v.failing_index = pos;
      v.residual = r;
      return v;
    }
  }
  return v;
}

std::vector<int> check_regularity(const DiffPoly& p, const TermTable& terms, std::string_view seq) {
  Prepared pr = prepare(p, seq);
  if (terms.size() < pr.order + 1) throw std::invalid_argument("check_regularity: window too short");
  DiffPoly ini = initial(p);
  std::vector<int> out;
  for (int pos = terms.start; pos + pr.order < terms.end(); ++pos) {
    auto a = window(pr, terms, pos, seq, pr.order + 1);
    if (evaluate(ini.body(), a).is_zero()) out.push_back(pos);
  }
  return out;
}

const std::vector<Rational>& bernoulli_fixture() {
  static const std::vector<Rational> b = [] {
    const char* v[] = {"1",  "-1/2", "1/6",      "0", "-1/30", "0", "1/42",     "0", "-1/30", "0",         "5/66",
                       "0", "-691/2730", "0", "7/6", "0", "-3617/510", "0", "43867/798", "0", "-174611/330"};
    std::vector<Rational> out;
    for (auto s : v) out.emplace_back(s);
    return out;
  }();
  return b;
}

}  // namespace dalg
