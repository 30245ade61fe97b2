#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dalg/diffpoly.hpp"

namespace dalg {

// States advance by w -> next(w); the output may read states k steps ahead
// through shifted(w, k). z_j is the output j steps along the orbit.
struct RationalOrbit {
  std::vector<VarId> states;
  std::vector<RatExpr> next;  // over the states, one per state
  RatExpr output;
};

struct RelationLimits {
  std::size_t max_unknowns = 1200;
  unsigned max_degree = 60;
  std::uint64_t seed = 1;
};

// Relations among z_0..z_k form a principal ideal at the lowest order k that
// has any, so its generator is the unique member of lowest order and degree.
// It is found by an ansatz over sampled points modulo word-size primes and
// lifted by rational reconstruction. The lift is accepted after it vanishes
// exactly at random rational points of the orbit. Coefficients must be
// rational. Returns a primitive integer polynomial in z[0..k], or nullopt
// once the ansatz outgrows the limits.
std::optional<MPoly> orbit_relation(const RationalOrbit& orbit, const std::vector<VarId>& z,
                                    const RelationLimits& limits = {});

}  // namespace dalg
