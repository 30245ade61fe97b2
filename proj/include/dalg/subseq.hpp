#pragma once

#include <string>

#include "dalg/closure.hpp"

namespace dalg {

struct SubseqOptions {
  ClosureOptions closure;
  int offset = 0;  // t(n) = s(d*n + offset)
};

struct SubseqResult {
  // order <= r equation for t(n) = s(dn + offset), in t's own shift
  ClosureResult stride;
  // the same equation with t(n+k) written as s(n+d*k)
  DiffPoly sigma_form;
  int d = 1;
  int offset = 0;
};

// States w_i = s(n+i), i < r, advanced by sigma^d: w_i -> w_{i+d} while
// i+d < r ("transport"), otherwise the closing equation from p ("closing").
DynSystem subsequence_system(const DiffPoly& p, int d);
SubseqResult subsequence(const DiffPoly& p, int d, const SubseqOptions& opt = {});

}  // namespace dalg
