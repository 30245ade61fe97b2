#include "dalg/subseq.hpp"

#include <stdexcept>

#include "dalg/errors.hpp"
#include "dalg/polyalg.hpp"

namespace dalg {

namespace {

VarId state_var(int i) { return seq_var("_w" + std::to_string(i), 0); }

std::string single_sequence(const DiffPoly& p) {
  auto s = p.sequences();
  if (s.size() != 1) throw std::invalid_argument("subsequence input must involve exactly one sequence");
  return s[0];
}

}  // namespace

DynSystem subsequence_system(const DiffPoly& p, int d) {
  if (d < 1) throw std::invalid_argument("stride must be positive");
  if (p.is_constant()) throw std::invalid_argument("subsequence input is constant");
  if (p.has_index()) throw std::invalid_argument("subsequence input must be free of n");
  std::string seq = single_sequence(p);
  int r = order_in(p, seq);
  if (r < 1) throw std::invalid_argument("subsequence input needs order at least 1");
  VarId top = seq_var(seq, r);

  DynSystem sys;
  for (int i = 0; i < r; ++i) sys.meaning.emplace_back(state_var(i), MPoly::var(seq_var(seq, i)));
  auto transport = [&](int i) {
    DynSystem::State st;
    st.w = state_var(i);
    st.Q = MPoly(1);
    st.a = MPoly::var(state_var(i + d));
    st.equation = MPoly::var(shifted(st.w, 1)) - st.a;
    st.origin = "transport";
    return st;
  };

  if (is_rationalizing(p)) {
    // x(k) as a rational function of the states, for k < r + d
    RatExpr R = solve_linear(p, top);
    std::vector<RatExpr> X;
    for (int k = 0; k < r; ++k) X.emplace_back(MPoly::var(state_var(k)));
    for (int k = r; k < r + d; ++k) {
      std::map<VarId, RatExpr> sub;
      for (int j = 0; j < r; ++j) sub[seq_var(seq, j)] = X[k - r + j];
      X.push_back(substitute_rat(R.num(), sub) / substitute_rat(R.den(), sub));
    }
    for (int i = 0; i < r; ++i) {
      if (i + d < r) {
        sys.states.push_back(transport(i));
        continue;
      }
      DynSystem::State st;
      st.w = state_var(i);
      st.Q = X[i + d].den();
      st.a = X[i + d].num();
      st.equation = st.Q * MPoly::var(shifted(st.w, 1)) - st.a;
      st.origin = "closing";
      sys.states.push_back(st);
    }
  } else {
    if (d > r)
      throw std::invalid_argument("stride larger than the order needs a rationalizing defining equation");
    // x(k) -> w_k below r, sigma^d(w_{k-d}) from r on
    auto place = [&](VarId v) -> VarId {
      if (!is_seq(v)) return v;
      int k = var_info(v).shift;
      return k < r ? state_var(k) : shifted(state_var(k - d), 1);
    };
    for (int i = 0; i < r; ++i) {
      if (i + d < r) {
        sys.states.push_back(transport(i));
        continue;
      }
      DynSystem::State st;
      st.w = state_var(i);
      MPoly eq = shift(p.body(), i + d - r).map_vars(place);
      VarId next = shifted(st.w, 1);
      auto cs = eq.coefficients(next);
      st.mu = static_cast<unsigned>(cs.size() - 1);
      st.Q = cs.back();
      st.e = eq - MPoly::monomial(Monomial::var(next, st.mu), 1) * st.Q;
      st.a = MPoly(0);
      st.equation = eq;
      st.origin = "closing";
      sys.states.push_back(st);
    }
  }
  sys.b = MPoly::var(state_var(0));
  sys.h = MPoly(1);
  sys.Q = MPoly(1);
  for (auto& st : sys.states) sys.Q = sys.Q * st.Q;
  return sys;
}

SubseqResult subsequence(const DiffPoly& p, int d, const SubseqOptions& opt) {
  std::string seq = single_sequence(p);
  DynSystem sys = subsequence_system(p, d);
  // state side conditions are stated for the original sequence below
  auto meaning = sys.meaning;
  sys.meaning.clear();
  SubseqResult res;
  res.d = d;
  res.offset = opt.offset;
  res.stride = eliminate_system(sys, opt.closure);
  for (auto& c : res.stride.side_conditions)
    c = c.map_vars([&](VarId v) {
      if (!is_seq(v) || var_info(v).seq.rfind("_w", 0) != 0) return v;
      int i = std::stoi(var_info(v).seq.substr(2));
      return seq_var(seq, i + d * var_info(v).shift + opt.offset);
    });
  const std::string& out = opt.closure.out;
  res.sigma_form = DiffPoly(res.stride.polynomial.body().map_vars([&](VarId v) {
    return is_seq(v) && var_info(v).seq == out ? seq_var(out, d * var_info(v).shift) : v;
  }));
  return res;
}

}  // namespace dalg
