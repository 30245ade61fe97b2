#include <doctest.h>

#include "dalg/errors.hpp"
#include "dalg/groebner.hpp"
#include "dalg/polyalg.hpp"
#include "support.hpp"

using namespace dalg;
using testsupport::x;

namespace {
VarId xv(int i) { return seq_var("x" + std::to_string(i), 0); }
MonomialOrder lex12() { return MonomialOrder::lex({xv(1), xv(2), xv(3)}); }
}  // namespace

TEST_CASE("buchberger small cases") {
  auto b = buchberger({x(1) - 2, x(2) - 3}, lex12());
  CHECK(b.is_groebner);
  CHECK(b.generators.size() == 2);
  CHECK(membership(x(1) - 2, b));
  CHECK(membership(x(2) - 3, b));

  b = buchberger({x(1) * x(1), x(1) * x(2) + x(2) * x(2)}, lex12());
  bool has_cube = false;
  for (auto& g : b.generators) has_cube |= g == x(2).pow(3);
  CHECK(has_cube);
  CHECK(satisfies_buchberger_criterion(b));
}

TEST_CASE("textbook division") {
  auto d = divide(x(1) * x(1) * x(2) + x(1) * x(2) * x(2) + x(2) * x(2), {x(1) * x(2) - 1, x(2) * x(2) - 1}, lex12());
  CHECK(d.remainder == x(1) + x(2) + 1);
}

TEST_CASE("saturation") {
  auto I = buchberger({x(1) * x(2)}, lex12());
  auto S = saturate(I, x(1));
  REQUIRE(S.generators.size() == 1);
  CHECK(S.generators[0] == x(2));
  S = saturate(buchberger({x(1)}, lex12()), x(2));
  REQUIRE(S.generators.size() == 1);
  CHECK(S.generators[0] == x(1));
  S = saturate(buchberger({x(1) * x(1) * x(2) - x(1)}, lex12()), x(1));
  REQUIRE(S.generators.size() == 1);
  CHECK(S.generators[0] == x(1) * x(2) - 1);
  // idempotent
  auto T = saturate(S, x(1));
  CHECK(T.generators == S.generators);
}

TEST_CASE("elimination") {
  VarId z = seq_var("z", 0);
  MPoly Z = MPoly::var(z);
  auto ord = MonomialOrder::elimination({xv(1), xv(2)}, {z});
  auto b = buchberger({Z - x(1) * x(2), x(1) - 2, x(2) - 3}, ord);
  CHECK(eliminate(b, {z}) == std::vector<MPoly>{Z - 6});
  b = buchberger({x(1) * x(1) - 2, Z - x(1)}, ord);
  CHECK(eliminate(b, {z}) == std::vector<MPoly>{Z * Z - 2});
  CHECK_THROWS(eliminate(buchberger({Z - x(1)}, MonomialOrder::lex({z, xv(1)})), {z}));
}

TEST_CASE("membership") {
  auto b = buchberger({x(1) * x(1) - x(2), x(2) * x(2) - 1}, lex12());
  CHECK(membership(x(1) * x(1) - x(2), b));
  CHECK(membership(x(1).pow(4) - 1, b));
  CHECK_FALSE(membership(MPoly(1), b));
  CHECK_FALSE(membership(x(1) - 1, b));
}

TEST_CASE("random ideals: generators reduce to zero and S-pairs vanish") {
  std::mt19937_64 rng(11);
  std::vector<VarId> vars{xv(1), xv(2), xv(3)};
  for (auto ord : {lex12(), MonomialOrder::grevlex({xv(1), xv(2), xv(3)})}) {
    for (int it = 0; it < 25; ++it) {
      std::vector<MPoly> g;
      for (int k = 0; k < 3; ++k) g.push_back(testsupport::random_poly(rng, vars, 3, 2, 5));
      std::erase_if(g, [](const MPoly& p) { return p.is_zero(); });
      if (g.empty()) continue;
      auto b = buchberger(g, ord);
      for (auto& p : g) CHECK(normal_form(p, b).is_zero());
      CHECK(satisfies_buchberger_criterion(b));
      // deterministic and independent of generator order
      std::reverse(g.begin(), g.end());
      CHECK(buchberger(g, ord).generators == b.generators);
    }
  }
}

TEST_CASE("resource caps fail loudly") {
  GroebnerLimits lim;
  lim.max_degree = 3;
  CHECK_THROWS_AS(buchberger({x(1).pow(5) - x(2), x(2).pow(4) - x(1)}, lex12(), lim), ResourceCapError);
  lim = {};
  lim.max_basis = 1;
  CHECK_THROWS_AS(buchberger({x(1) * x(1), x(1) * x(2) + x(2) * x(2)}, lex12(), lim), ResourceCapError);
}
