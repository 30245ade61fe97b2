#pragma once

#include <random>
#include <string>
#include <vector>

#include "dalg/mpoly.hpp"

namespace testsupport {

using dalg::MPoly;
using dalg::Rational;
using dalg::VarId;

inline MPoly x(int i) { return MPoly::var(dalg::seq_var("x" + std::to_string(i), 0)); }
inline MPoly s(int k) { return MPoly::var(dalg::seq_var("s", k)); }
inline MPoly n() { return MPoly::var(dalg::index_var()); }

inline MPoly random_poly(std::mt19937_64& rng, const std::vector<VarId>& vars, int terms, int maxdeg, int coef = 9) {
  std::uniform_int_distribution<int> c(-coef, coef), e(0, maxdeg), vi(0, static_cast<int>(vars.size()) - 1);
  MPoly p;
  for (int t = 0; t < terms; ++t) {
    MPoly m(c(rng));
    int d = e(rng);
    for (int k = 0; k < d; ++k) m = m * MPoly::var(vars[vi(rng)]);
    p += m;
  }
  return p;
}

// Independent evaluation straight from the term list.
inline Rational eval(const MPoly& p, const std::function<Rational(VarId)>& val) {
  Rational sum = 0;
  for (auto& [m, c] : p.terms()) {
    Rational t = c;
    for (auto& [v, e] : m.factors())
      for (std::uint32_t k = 0; k < e; ++k) t *= val(v);
    sum += t;
  }
  return sum;
}

}  // namespace testsupport
