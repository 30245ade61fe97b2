#pragma once

#include <cstddef>
#include <vector>

#include "dalg/mpoly.hpp"
#include "dalg/order.hpp"

namespace dalg {

// Exceeding a cap raises ResourceCapError; results are never truncated.
struct GroebnerLimits {
  std::size_t max_basis = 5000;
  unsigned max_degree = 250;
  // term-limb operations in reductions; 0 means unlimited
  std::size_t max_work = 0;
};

struct IdealBasis {
  std::vector<MPoly> generators;
  MonomialOrder order;
  bool is_groebner = false;
};

// Reduced Groebner basis: primitive integer members with positive leading
// coefficient, sorted by ascending leading monomial.
IdealBasis buchberger(const std::vector<MPoly>& gens, const MonomialOrder& order, const GroebnerLimits& limits = {});

// I : q^infinity via a fresh variable t with t*q - 1.
IdealBasis saturate(const IdealBasis& basis, const MPoly& q, const GroebnerLimits& limits = {});

// Members of a Groebner basis lying in the kept variables. The order must
// rank every other variable above the kept ones.
std::vector<MPoly> eliminate(const IdealBasis& basis, const std::vector<VarId>& keep);

MPoly normal_form(const MPoly& p, const IdealBasis& basis);
bool membership(const MPoly& p, const IdealBasis& basis);
MPoly s_polynomial(const MPoly& f, const MPoly& g, const MonomialOrder& order);
// Every S-polynomial of the generators reduces to zero.
bool satisfies_buchberger_criterion(const IdealBasis& basis);

// (gens + <t*q - 1>) intersected with k[keep], computed under a grevlex
// block on t and eliminate above a lex block on keep (ranked highest first).
std::vector<MPoly> eliminate_saturated(const std::vector<MPoly>& gens, const MPoly& q,
                                       const std::vector<VarId>& eliminate, const std::vector<VarId>& keep,
                                       const GroebnerLimits& limits = {});

}  // namespace dalg
