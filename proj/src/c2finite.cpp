#include "dalg/c2finite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dalg/errors.hpp"
#include "dalg/polyalg.hpp"

namespace dalg {

CFiniteRule CFiniteRule::from_diffpoly(const DiffPoly& p) {
  auto seqs = p.sequences();
  if (seqs.size() != 1) throw std::invalid_argument("C-finite rule must involve exactly one sequence");
  if (p.has_index()) throw std::invalid_argument("C-finite rule must have constant coefficients");
  CFiniteRule r;
  r.seq = seqs[0];
  int ord = order_in(p, r.seq);
  if (ord < 1) throw std::invalid_argument("C-finite rule of order 0");
  std::vector<MPoly> c(ord + 1);
  for (auto& [m, k] : p.body().terms()) {
    int shift = -1;
    std::vector<Monomial::Factor> rest;
    for (auto& [v, e] : m.factors()) {
      if (is_seq(v)) {
        if (shift >= 0 || e != 1) throw std::invalid_argument("C-finite rule is not linear");
        shift = var_info(v).shift;
      } else {
        rest.emplace_back(v, e);
      }
    }
    if (shift < 0) throw std::invalid_argument("C-finite rule is not homogeneous");
    c[shift] += MPoly::monomial(Monomial(std::move(rest)), k);
  }
  if (!c.back().is_constant())
    throw std::invalid_argument("C-finite rule needs a constant leading coefficient");
  Rational lead = c.back().constant_term();
  for (int k = 0; k < ord; ++k) r.alpha.push_back(c[k] * Rational(-1 / lead));
  return r;
}

namespace {

VarId cvar(int j, int k) { return seq_var("_c" + std::to_string(j), k); }
bool is_cvar(VarId v) { return is_seq(v) && var_info(v).seq.rfind("_c", 0) == 0; }

// gcd of the coefficients of p seen as a polynomial in the main variables
MPoly content_over(const MPoly& p, const std::function<bool(VarId)>& main) {
  std::map<std::vector<Monomial::Factor>, std::vector<MPoly::Term>> groups;
  for (auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> key, rest;
    for (auto& f : m.factors()) (main(f.first) ? key : rest).push_back(f);
    groups[key].emplace_back(Monomial(std::move(rest)), c);
  }
  MPoly g;
  for (auto& [k, ts] : groups) {
    MPoly c = MPoly::from_terms(ts);
    g = g.is_zero() ? c : gcd(g, c);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

struct Eliminator {
  std::string seq;
  std::vector<int> R;  // rule orders per coefficient index (0 for constants)
  std::vector<std::vector<MPoly>> alpha;
  std::map<VarId, RatExpr> bound;
  std::vector<MPoly> side;

  void note(const MPoly& d) {
    if (d.is_constant()) return;
    MPoly q = primitive(d);
    if (std::find(side.begin(), side.end(), q) == side.end()) side.push_back(q);
  }

  MPoly apply_rules(MPoly p) const {
    for (;;) {
      VarId hit = 0;
      int best = -1;
      for (VarId v : p.variables()) {
        if (!is_cvar(v)) continue;
        int j = std::stoi(var_info(v).seq.substr(2));
        int m = var_info(v).shift;
        if (m >= R[j] && m > best) {
          best = m;
          hit = v;
        }
      }
      if (best < 0) return p;
      int j = std::stoi(var_info(hit).seq.substr(2));
      MPoly e;
      for (int k = 0; k < R[j]; ++k) e += alpha[j][k] * MPoly::var(cvar(j, best - R[j] + k));
      p = p.substitute(hit, e);
    }
  }

  MPoly reduce(const MPoly& p0) {
    MPoly p = apply_rules(p0);
    RatExpr r = substitute_rat(p, bound);
    note(r.den());
    p = r.num();
    // factors free of s are coefficient expressions assumed nonzero
    MPoly g = content_over(p, [&](VarId v) { return is_seq(v) && var_info(v).seq == seq; });
    if (!g.is_constant()) {
      note(g);
      p = divide_exact(p, g);
    }
    return p;
  }

  void solve(const MPoly& p, VarId target) {
    auto d = p.degree(target);
    if (d == 0)
      throw DegenerateError("coefficient term " + var_info(target).name + " dropped out of the equation");
    if (d != 1) throw InternalError("coefficient term occurs nonlinearly");
    RatExpr b = solve_linear(DiffPoly(p), target);
    note(b.den());
    for (auto& [v, e] : bound) {
      if (!e.num().contains(target) && !e.den().contains(target)) continue;
      std::map<VarId, RatExpr> one{{target, b}};
      e = substitute_rat(e.num(), one) / substitute_rat(e.den(), one);
    }
    bound.emplace(target, b);
  }
};

}  // namespace

ClosureResult c2f_to_ratrec(const C2Eq& e, const C2Options& opt) {
  const std::string& seq = e.seq;
  if (e.body.has_index()) throw std::invalid_argument("C2-finite equation must be free of n");
  int l = order_in(e.body, seq);
  if (l < 1) throw std::invalid_argument("C2-finite equation needs order at least 1");
  std::map<std::string, const CFiniteRule*> rules;
  for (auto& r : e.rules) rules[r.seq] = &r;
  for (auto& s : e.body.sequences())
    if (s != seq && !rules.count(s)) throw std::invalid_argument("no C-finite rule for coefficient sequence " + s);

  // coefficient of s(n+j)
  std::vector<MPoly> coef(l + 1);
  for (auto& [m, c] : e.body.body().terms()) {
    int shift = -1;
    std::vector<Monomial::Factor> rest;
    for (auto& [v, d] : m.factors()) {
      if (is_seq(v) && var_info(v).seq == seq) {
        if (shift >= 0 || d != 1) throw std::invalid_argument("C2-finite equation is not linear in " + seq);
        shift = var_info(v).shift;
      } else {
        rest.emplace_back(v, d);
      }
    }
    if (shift < 0) throw std::invalid_argument("C2-finite equation is not homogeneous in " + seq);
    coef[shift] += MPoly::monomial(Monomial(std::move(rest)), c);
  }

  Eliminator el;
  el.seq = seq;
  el.R.assign(l + 1, 0);
  el.alpha.assign(l + 1, {});
  MPoly p;
  bool nonzero_constant = false;
  for (int j = 0; j <= l; ++j) {
    MPoly sj = MPoly::var(seq_var(seq, j));
    if (coef[j].is_zero()) continue;
    std::set<std::string> used;
    for (VarId v : coef[j].variables())
      if (is_seq(v)) used.insert(var_info(v).seq);
    if (used.empty()) {
      nonzero_constant = true;
      p += coef[j] * sj;
      continue;
    }
    if (used.size() != 1) throw std::invalid_argument("coefficient of " + var_info(sj.lead().first.factors()[0].first).name +
                                                      " mixes several coefficient sequences");
    for (auto& [m, c] : coef[j].terms()) {
      unsigned deg = 0;
      for (auto& [v, d] : m.factors())
        if (is_seq(v)) deg += d;
      if (deg != 1) throw std::invalid_argument("coefficient sequences must occur linearly");
    }
    const CFiniteRule& rule = *rules.at(*used.begin());
    el.R[j] = rule.order();
    el.alpha[j] = rule.alpha;
    p += MPoly::var(cvar(j, 0)) * sj;
  }
  if (el.R[l] == 0 && coef[l].is_zero()) throw InternalError("leading coefficient vanished");

  std::vector<int> r = el.R;
  if (!nonzero_constant && r[l] > 0) r[l] -= 1;
  std::vector<int> order = opt.elimination_order;
  if (order.empty()) {
    order.resize(l + 1);
    std::iota(order.begin(), order.end(), 0);
  }
  if (static_cast<int>(order.size()) != l + 1) throw std::invalid_argument("elimination order must list 0..l");

  // The loop of the algorithm, read as a priority list: each step solves the
  // first pending c_j(n+k) in elimination order that occurs in p. With the
  // default order this is the ascending nested loop.
  std::vector<VarId> pending;
  for (int j : order) {
    if (j < 0 || j > l) throw std::invalid_argument("elimination order must list 0..l");
    for (int k = 0; k < r[j]; ++k) pending.push_back(cvar(j, k));
  }
  int shifts = 0;
  while (!pending.empty()) {
    auto it = std::find_if(pending.begin(), pending.end(), [&](VarId v) { return p.contains(v); });
    if (it == pending.end())
      throw DegenerateError("coefficient term " + var_info(pending.front()).name + " dropped out of the equation");
    el.solve(p, *it);
    pending.erase(it);
    p = el.reduce(shift(p, 1));
    ++shifts;
  }
  int total = l + shifts;
  // what is left is a monomial factor in the leftover coefficient times a
  // rationalizing polynomial in s
  MPoly g = content_over(p, [&](VarId v) { return is_seq(v) && var_info(v).seq == seq; });
  if (!g.is_constant()) p = divide_exact(p, g);
  for (VarId v : p.variables())
    if (is_cvar(v)) throw InternalError("coefficient sequence survived the elimination");
  VarId top = seq_var(seq, total);
  if (p.degree(top) != 1) throw DegenerateError("final equation is not linear in " + var_info(top).name);
  MPoly c = content_in(p, top);
  if (!c.is_constant()) {
    el.note(c);
    p = divide_exact(p, c);
  }
  DiffPoly out = normalize(rename_sequence(DiffPoly(p), seq, opt.out));
  el.note(initial(out).body());
  return make_result(out, opt.out, total, el.side);
}

}  // namespace dalg
