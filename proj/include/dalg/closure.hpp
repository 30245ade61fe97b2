#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dalg/groebner.hpp"
#include "dalg/result.hpp"

namespace dalg {

// Extra state: sigma(aux) = next, where next is rational in the input
// sequence terms and in the aux terms aux(n).
struct AuxState {
  std::string name;
  RatExpr next;
};

// The radical-rational system: every state satisfies
// sigma(w)^mu * Q = a + e with e collecting the sigma(w) terms of lower degree.
struct DynSystem {
  struct State {
    VarId w;
    unsigned mu = 1;
    MPoly Q, a, e;
    MPoly equation;  // Q*sigma(w)^mu - a - e, in w and sigma(w)
    std::string origin;  // "chain", "closing" or "aux"
  };
  std::vector<State> states;
  MPoly b, h;  // output z = b/h over the states (and beyond-block shifts)
  MPoly Q;     // product of every state denominator and h
  // state variable -> the input term it stands for
  std::vector<std::pair<VarId, MPoly>> meaning;
  int dimension() const { return static_cast<int>(states.size()); }
  bool rationalizing() const;
};

struct ClosureOptions {
  GroebnerLimits limits;
  std::string out = "s";
  std::uint64_t seed = 1;  // sample points of the orbit ansatz
};

// Inputs each involve one sequence; their names must be distinct. f is a
// rational expression in the input terms u(n+k), and in aux(n).
DynSystem build_system(const std::vector<DiffPoly>& inputs, const RatExpr& f, const std::vector<AuxState>& extra = {});
ClosureResult eliminate_system(const DynSystem& sys, const ClosureOptions& opt = {});
ClosureResult arith(const std::vector<DiffPoly>& inputs, const RatExpr& f, const ClosureOptions& opt = {});

ClosureResult closure_add(const DiffPoly& p, const DiffPoly& q, const ClosureOptions& opt = {});
ClosureResult closure_mul(const DiffPoly& p, const DiffPoly& q, const ClosureOptions& opt = {});
// p over q; q's sequence is assumed to never vanish.
ClosureResult closure_div(const DiffPoly& p, const DiffPoly& q, const ClosureOptions& opt = {});
ClosureResult closure_radical(const DiffPoly& p, unsigned N, const ClosureOptions& opt = {});
ClosureResult partial_sum(const DiffPoly& p, const ClosureOptions& opt = {});
ClosureResult partial_product(const DiffPoly& p, const ClosureOptions& opt = {});
ClosureResult aitken(const DiffPoly& p, const ClosureOptions& opt = {});

// s(n) - (s(n+1) - s(n))^2 / (s(n+2) - 2 s(n+1) + s(n)) over the named sequence.
RatExpr aitken_map(const std::string& seq);

}  // namespace dalg
