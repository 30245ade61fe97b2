#pragma once

#include <string>
#include <vector>

#include "dalg/result.hpp"

namespace dalg {

// c(n+r) = alpha[0] c(n) + ... + alpha[r-1] c(n+r-1), alpha free of sequences.
struct CFiniteRule {
  std::string seq;
  std::vector<MPoly> alpha;
  int order() const { return static_cast<int>(alpha.size()); }
  // From an equation such as "c1(n+2) = c1(n+1) + c1(n)".
  static CFiniteRule from_diffpoly(const DiffPoly& p);
};

// sum_j coeff_j s(n+j) = 0 where every coeff_j is a constant or a linear
// form in the shifts of one ruled sequence.
struct C2Eq {
  std::string seq = "s";
  DiffPoly body;
  std::vector<CFiniteRule> rules;
};

struct C2Options {
  std::string out = "s";
  // Order in which the coefficient indices are eliminated; empty means 0..l.
  std::vector<int> elimination_order;
};

ClosureResult c2f_to_ratrec(const C2Eq& e, const C2Options& opt = {});

}  // namespace dalg
