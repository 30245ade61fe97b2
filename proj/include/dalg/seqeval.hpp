#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dalg/coefficient.hpp"
#include "dalg/diffpoly.hpp"

namespace dalg {

enum class RootPolicy { Unique, PositiveDiscriminant, Smallest, Largest, ByPredicate };
RootPolicy parse_root_policy(std::string_view name);

struct RootChoice {
  RootPolicy policy = RootPolicy::Unique;
  std::function<bool(const Rational&)> predicate;  // ByPredicate only
};

// A single defining polynomial, or an ordered factor list. With k factors
// the step producing term m uses factor (m - first computed index) mod k.
struct SeqSpec {
  std::vector<DiffPoly> factors;
  std::string seq = "s";
  int start = 0;
  std::vector<Coefficient> initial;
  RootChoice roots;
};

struct TermTable {
  int start = 0;
  std::vector<Coefficient> terms;
  std::vector<std::string> notes;

  int size() const { return static_cast<int>(terms.size()); }
  int end() const { return start + size(); }
  bool has(int i) const { return i >= start && i < end(); }
  const Coefficient& at(int i) const { return terms.at(static_cast<std::size_t>(i - start)); }
  static TermTable from_rationals(int start, const std::vector<Rational>& values);
};

// count is the total number of terms, initial ones included.
TermTable unroll(const SeqSpec& spec, int count);

struct Verdict {
  bool ok = true;
  int failing_index = -1;
  Coefficient residual;
  int positions = 0;  // window positions checked
};
// Positions m where s(m..m+ord) are all in the table; n is set to m.
Verdict verify(const DiffPoly& p, const TermTable& terms, std::string_view seq = "s");
// Window positions where the initial of p vanishes.
std::vector<int> check_regularity(const DiffPoly& p, const TermTable& terms, std::string_view seq = "s");

// Rational roots with multiplicity, ascending.
std::vector<Rational> rational_roots(const MPoly& q);
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);  // index = power

// B_0 .. B_20.
const std::vector<Rational>& bernoulli_fixture();

}  // namespace dalg
