#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dalg/result.hpp"

namespace dalg {

// P_0(n) s(n) + ... + P_l(n) s(n+l) = 0.
struct HoloEq {
  std::string seq = "s";
  std::vector<MPoly> coeffs;  // polynomials in n and parameters

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  unsigned degree() const;
  DiffPoly to_diffpoly() const;
  // Rejects anything that is not linear homogeneous in the sequence terms.
  static HoloEq from_diffpoly(const DiffPoly& p);
};

ClosureResult holo_to_ratrec(const HoloEq& h);

// Largest nonnegative integer root of a univariate polynomial in n, if any.
std::optional<long> max_nonneg_integer_root(const MPoly& p);

// Fraction-free determinant.
MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m);

}  // namespace dalg
