#include "dalg/closure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "dalg/errors.hpp"
#include "dalg/implicit.hpp"
#include "dalg/polyalg.hpp"

namespace dalg {

namespace {

constexpr const char* kOut = "_z";
constexpr std::size_t kProbeWork = 400000;

VarId state_var(int i) { return seq_var("_w" + std::to_string(i), 0); }
VarId base_of(VarId v) { return seq_var(var_info(v).seq, 0); }

bool is_state(VarId v) {
  const auto& in = var_info(v);
  return in.kind == VarKind::Seq && in.seq.rfind("_w", 0) == 0;
}

std::string single_sequence(const DiffPoly& p) {
  auto s = p.sequences();
  if (s.size() != 1) throw std::invalid_argument("closure input must involve exactly one sequence");
  return s[0];
}

// Maps input terms to state variables: u(n+k) with k < r is a state, later
// shifts are shifts of the last state of the block.
struct TermMap {
  struct Block {
    int first;
    int order;
  };
  std::map<std::string, Block> blocks;

  VarId operator()(VarId v) const {
    if (!is_seq(v)) return v;
    const auto& in = var_info(v);
    auto it = blocks.find(in.seq);
    if (it == blocks.end()) throw std::invalid_argument("unknown sequence " + in.seq + " in the closure map");
    auto [first, r] = it->second;
    if (in.shift < r) return state_var(first + in.shift);
    return shifted(state_var(first + r - 1), in.shift - r + 1);
  }
  MPoly map(const MPoly& p) const {
    return p.map_vars([this](VarId v) { return (*this)(v); });
  }
};

int max_state_shift(const MPoly& p) {
  int k = 0;
  for (VarId v : p.variables())
    if (is_state(v)) k = std::max(k, var_info(v).shift);
  return k;
}

DiffPoly select(const std::vector<MPoly>& members) {
  struct Cand {
    int order;
    unsigned degree;
    std::size_t size;
    const MPoly* p;
  };
  std::vector<Cand> c;
  for (auto& m : members) {
    DiffPoly d(m);
    int o = order_in(d, kOut);
    if (o < 0) continue;
    c.push_back({o, order_degree(d).degree, m.size(), &m});
  }
  if (c.empty()) throw InternalError("elimination ideal has no member in the output sequence");
  std::sort(c.begin(), c.end(), [](const Cand& a, const Cand& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.size != b.size) return a.size < b.size;
    return canonical_compare(canonical_lead(*a.p).first, canonical_lead(*b.p).first) < 0;
  });
  return DiffPoly(*c.front().p);
}

std::vector<VarId> kept_vars(const std::vector<MPoly>& gens, const MPoly& q, int M) {
  std::vector<VarId> keep;
  for (int k = M; k >= 0; --k) keep.push_back(seq_var(kOut, k));
  std::set<VarId> params;
  for (auto* p : {&q})
    for (VarId v : p->variables())
      if (is_param(v)) params.insert(v);
  for (auto& g : gens)
    for (VarId v : g.variables())
      if (is_param(v)) params.insert(v);
  std::vector<VarId> ps(params.begin(), params.end());
  std::sort(ps.begin(), ps.end(), [](VarId a, VarId b) { return compare_rank(a, b) > 0; });
  keep.insert(keep.end(), ps.begin(), ps.end());
  return keep;
}

MPoly to_inputs(const MPoly& p, const DynSystem& sys) {
  std::map<VarId, MPoly> back;
  for (VarId v : p.variables()) {
    if (!is_state(v)) continue;
    VarId b = base_of(v);
    for (auto& [w, m] : sys.meaning)
      if (w == b) back[v] = shift(m, var_info(v).shift);
  }
  return p.substitute(back);
}

ClosureResult finish(const DiffPoly& q, const DynSystem& sys, const ClosureOptions& opt) {
  int M = sys.dimension();
  DiffPoly out = normalize(rename_sequence(q, kOut, opt.out));
  std::vector<MPoly> side;
  for (auto& st : sys.states)
    if (!st.Q.is_constant()) side.push_back(to_inputs(st.Q, sys));
  if (!sys.h.is_constant()) side.push_back(to_inputs(sys.h, sys));
  ClosureResult r = make_result(out, opt.out, M, side);
  if (r.order > M) throw InternalError("closure output exceeds the order bound");
  return r;
}

// Rationalizing systems: every shift of z is a rational function of the
// states themselves, so only M state variables need eliminating.
ClosureResult eliminate_rational(const DynSystem& sys, const ClosureOptions& opt) {
  int M = sys.dimension();
  std::map<VarId, RatExpr> R;
  for (auto& st : sys.states) R[st.w] = RatExpr(st.a, st.Q);
  // resolve sigma(w) occurring on right-hand sides
  for (int pass = 0; pass <= M; ++pass) {
    bool changed = false;
    for (auto& [w, r] : R) {
      std::map<VarId, RatExpr> sub;
      for (auto* p : {&r.num(), &r.den()})
        for (VarId v : p->variables())
          if (is_state(v) && var_info(v).shift == 1) sub[v] = R.at(base_of(v));
      if (sub.empty()) continue;
      r = substitute_rat(r.num(), sub) / substitute_rat(r.den(), sub);
      changed = true;
    }
    if (!changed) break;
    if (pass == M) throw InternalError("cyclic state dependencies");
  }
  auto step = [&](const RatExpr& F) { return substitute_rat(F.num(), R) / substitute_rat(F.den(), R); };
  // shifted states in the output map
  std::map<VarId, RatExpr> deep;
  int kmax = std::max(max_state_shift(sys.b), max_state_shift(sys.h));
  for (auto& st : sys.states) {
    RatExpr cur(MPoly::var(st.w));
    for (int k = 1; k <= kmax; ++k) {
      cur = step(cur);
      deep[shifted(st.w, k)] = cur;
    }
  }
  RatExpr z = deep.empty() ? RatExpr(sys.b, sys.h) : substitute_rat(sys.b, deep) / substitute_rat(sys.h, deep);
  std::vector<MPoly> gens;
  MPoly q(1);
  for (int j = 0; j <= M; ++j) {
    if (j > 0) z = step(z);
    gens.push_back(z.den() * MPoly::var(seq_var(kOut, j)) - z.num());
    if (!z.den().is_constant()) q = lcm(q, z.den());
  }
  std::vector<VarId> elim;
  for (auto& st : sys.states) elim.push_back(st.w);
  // a generator c*w - rest with constant c and rest free of w solves for
  // that state; substitute it away instead of eliminating it
  for (std::size_t g = 0; g < gens.size();) {
    auto it = std::find_if(elim.begin(), elim.end(), [&](VarId w) {
      return gens[g].degree(w) == 1 && gens[g].coefficient(w, 1).is_constant();
    });
    if (it == elim.end()) {
      ++g;
      continue;
    }
    VarId w = *it;
    MPoly value = gens[g].coefficient(w, 0) * Rational(-1 / gens[g].coefficient(w, 1).constant_term());
    elim.erase(it);
    gens.erase(gens.begin() + static_cast<long>(g));
    for (auto& h : gens) h = h.substitute(w, value);
    q = q.substitute(w, value);
    g = 0;
  }
  auto keep = kept_vars(gens, q, M);
  bool params = std::any_of(keep.begin(), keep.end(), is_param);
  if (!params) {
    // Groebner is quickest on most inputs but its coefficients can explode
    // on tiny ones; past a work budget the orbit ansatz takes over
    GroebnerLimits probe = opt.limits;
    probe.max_work = probe.max_work ? std::min(probe.max_work, kProbeWork) : kProbeWork;
    try {
      return finish(select(eliminate_saturated(gens, q, elim, keep, probe)), sys, opt);
    } catch (const ResourceCapError&) {
    }
    RationalOrbit orb;
    for (auto& [w, r] : R) {
      orb.states.push_back(w);
      orb.next.push_back(r);
    }
    orb.output = RatExpr(sys.b, sys.h);
    std::vector<VarId> zs;
    for (int j = 0; j <= M; ++j) zs.push_back(seq_var(kOut, j));
    RelationLimits rl;
    rl.seed = opt.seed;
    if (auto rel = orbit_relation(orb, zs, rl)) return finish(DiffPoly(*rel), sys, opt);
  }
  auto members = eliminate_saturated(gens, q, elim, keep, opt.limits);
  return finish(select(members), sys, opt);
}

ClosureResult eliminate_general(const DynSystem& sys, const ClosureOptions& opt) {
  int M = sys.dimension();
  int kmax = std::max(max_state_shift(sys.b), max_state_shift(sys.h));
  int K = M + kmax;
  std::vector<MPoly> gens;
  MPoly q(1);
  for (auto& st : sys.states)
    for (int j = 0; j < K; ++j) {
      gens.push_back(shift(st.equation, j));
      if (!st.Q.is_constant()) q = q * shift(st.Q, j);
    }
  MPoly out = sys.h * MPoly::var(seq_var(kOut, 0)) - sys.b;
  for (int j = 0; j <= M; ++j) {
    gens.push_back(shift(out, j));
    if (!sys.h.is_constant()) q = q * shift(sys.h, j);
  }
  std::set<VarId> ws;
  for (auto& g : gens)
    for (VarId v : g.variables())
      if (is_state(v)) ws.insert(v);
  std::vector<VarId> elim(ws.begin(), ws.end());
  std::sort(elim.begin(), elim.end(), [](VarId a, VarId b) { return compare_rank(a, b) > 0; });
  auto keep = kept_vars(gens, q, M);
  auto members = eliminate_saturated(gens, q, elim, keep, opt.limits);
  return finish(select(members), sys, opt);
}

DiffPoly rename_to(const DiffPoly& p, const std::string& to) { return rename_sequence(p, single_sequence(p), to); }

}  // namespace

bool DynSystem::rationalizing() const {
  return std::all_of(states.begin(), states.end(), [](const State& s) { return s.mu == 1 && s.e.is_zero(); });
}

DynSystem build_system(const std::vector<DiffPoly>& inputs, const RatExpr& f, const std::vector<AuxState>& extra) {
  if (inputs.empty() && extra.empty()) throw std::invalid_argument("closure needs at least one input");
  DynSystem sys;
  TermMap tm;
  int next = 1;
  for (auto& p : inputs) {
    if (p.is_constant()) throw std::invalid_argument("closure input is constant");
    if (p.has_index()) throw std::invalid_argument("closure input must be free of n");
    std::string seq = single_sequence(p);
    if (tm.blocks.count(seq)) throw std::invalid_argument("two closure inputs share the sequence name " + seq);
    int r = order_in(p, seq);
    if (r < 1) throw std::invalid_argument("closure input of order 0 defines no sequence");
    tm.blocks[seq] = {next, r};
    next += r;
  }
  for (auto& a : extra) {
    if (tm.blocks.count(a.name)) throw std::invalid_argument("aux state name clashes with " + a.name);
    tm.blocks[a.name] = {next++, 1};
  }
  sys.meaning.clear();
  for (auto& [seq, b] : tm.blocks)
    for (int k = 0; k < b.order; ++k) sys.meaning.emplace_back(state_var(b.first + k), MPoly::var(seq_var(seq, k)));
  std::sort(sys.meaning.begin(), sys.meaning.end(), [](auto& a, auto& b) { return a.first < b.first; });

  for (auto& p : inputs) {
    std::string seq = single_sequence(p);
    auto [first, r] = tm.blocks.at(seq);
    for (int k = 0; k + 1 < r; ++k) {
      DynSystem::State st;
      st.w = state_var(first + k);
      st.Q = 1;
      st.a = MPoly::var(state_var(first + k + 1));
      st.equation = MPoly::var(shifted(st.w, 1)) - st.a;
      st.origin = "chain";
      sys.states.push_back(std::move(st));
    }
    DynSystem::State st;
    st.w = state_var(first + r - 1);
    VarId sw = shifted(st.w, 1);
    st.equation = tm.map(p.body());
    auto cs = st.equation.coefficients(sw);
    st.mu = static_cast<unsigned>(cs.size() - 1);
    st.Q = cs.back();
    for (auto& [m, c] : st.equation.terms()) {
      auto d = m.degree(sw);
      if (d == st.mu) continue;
      (d == 0 ? st.a : st.e) -= MPoly::monomial(m, c);
    }
    st.origin = "closing";
    sys.states.push_back(std::move(st));
  }
  for (auto& a : extra) {
    DynSystem::State st;
    st.w = state_var(tm.blocks.at(a.name).first);
    st.a = tm.map(a.next.num());
    st.Q = tm.map(a.next.den());
    st.equation = st.Q * MPoly::var(shifted(st.w, 1)) - st.a;
    st.origin = "aux";
    sys.states.push_back(std::move(st));
  }
  sys.b = tm.map(f.num());
  sys.h = tm.map(f.den());
  sys.Q = sys.h;
  for (auto& st : sys.states)
    if (!st.Q.is_constant()) sys.Q = sys.Q * st.Q;
  return sys;
}

ClosureResult eliminate_system(const DynSystem& sys, const ClosureOptions& opt) {
  if (sys.rationalizing()) return eliminate_rational(sys, opt);
  return eliminate_general(sys, opt);
}

ClosureResult arith(const std::vector<DiffPoly>& inputs, const RatExpr& f, const ClosureOptions& opt) {
  return eliminate_system(build_system(inputs, f), opt);
}

namespace {
MPoly term(const char* seq, int k) { return MPoly::var(seq_var(seq, k)); }
}  // namespace

ClosureResult closure_add(const DiffPoly& p, const DiffPoly& q, const ClosureOptions& opt) {
  return arith({rename_to(p, "u"), rename_to(q, "v")}, RatExpr(term("u", 0) + term("v", 0)), opt);
}

ClosureResult closure_mul(const DiffPoly& p, const DiffPoly& q, const ClosureOptions& opt) {
  return arith({rename_to(p, "u"), rename_to(q, "v")}, RatExpr(term("u", 0) * term("v", 0)), opt);
}

ClosureResult closure_div(const DiffPoly& p, const DiffPoly& q, const ClosureOptions& opt) {
  return arith({rename_to(p, "u"), rename_to(q, "v")}, RatExpr(term("u", 0), term("v", 0)), opt);
}

ClosureResult closure_radical(const DiffPoly& p, unsigned N, const ClosureOptions& opt) {
  if (N == 0) throw std::invalid_argument("radical index must be positive");
  std::string seq = single_sequence(p);
  std::map<VarId, MPoly> sub;
  for (VarId v : p.body().variables())
    if (is_seq(v)) sub[v] = MPoly::var(v).pow(N);
  DiffPoly r = normalize(rename_sequence(DiffPoly(p.body().substitute(sub)), seq, opt.out));
  return make_result(r, opt.out, order_in(p, seq), {});
}

ClosureResult partial_sum(const DiffPoly& p, const ClosureOptions& opt) {
  DiffPoly u = rename_to(p, "u");
  AuxState acc{"_acc", RatExpr(term("_acc", 0) + term("u", 0))};
  return eliminate_system(build_system({u}, RatExpr(term("_acc", 0)), {acc}), opt);
}

ClosureResult partial_product(const DiffPoly& p, const ClosureOptions& opt) {
  DiffPoly u = rename_to(p, "u");
  AuxState acc{"_acc", RatExpr(term("_acc", 0) * term("u", 0))};
  return eliminate_system(build_system({u}, RatExpr(term("_acc", 0)), {acc}), opt);
}

RatExpr aitken_map(const std::string& seq) {
  MPoly s0 = MPoly::var(seq_var(seq, 0)), s1 = MPoly::var(seq_var(seq, 1)), s2 = MPoly::var(seq_var(seq, 2));
  MPoly d2 = s2 - 2 * s1 + s0;
  return RatExpr(s0 * d2 - (s1 - s0) * (s1 - s0), d2);
}

ClosureResult aitken(const DiffPoly& p, const ClosureOptions& opt) {
  return arith({rename_to(p, "u")}, aitken_map("u"), opt);
}

}  // namespace dalg
