#include <doctest.h>

#include <random>
#include <sstream>

#include "dalg/errors.hpp"
#include "dalg/holonomic.hpp"
#include "dalg/parse.hpp"
#include "dalg/render.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace dalg;
using testsupport::s;

TEST_CASE("spec grammar examples") {
  auto e = parse_equation("s(n+2)*s(n) - s(n+1)*(s(n)+s(n+1)) = 0");
  CHECK(e.kind == EquationKind::Difference);
  CHECK(e.poly == parse_diffpoly(fx::factorial));
  CHECK(e.poly.body() == s(2) * s(0) - s(1) * (s(0) + s(1)));

  auto z = parse_diffpoly("s(n) = 0");
  CHECK(order(z) == 0);
  CHECK(z.body() == s(0));

  auto h = parse_equation(fx::catalan_holo);
  CHECK(h.kind == EquationKind::Holonomic);
  REQUIRE(h.holo.has_value());
  CHECK(h.holo->order() == 1);
  CHECK(h.holo->degree() == 1);
}

TEST_CASE("literals, powers and whitespace") {
  CHECK(parse_diffpoly("  s( n + 1 )^2 -  3/4 * s(n)").body() == s(1) * s(1) - Rational(3, 4) * s(0));
  CHECK(parse_diffpoly("-(s(n)-1)^3").body() == -(s(0) - 1).pow(3));
  CHECK(parse_diffpoly("s(n+1) = 2*s(n) + 1").body() == s(1) - 2 * s(0) - 1);
  // a rational equation keeps the numerator of lhs - rhs
  CHECK(parse_diffpoly("s(n+1) = 1/s(n)").body() == s(1) * s(0) - 1);
  CHECK(parse_expression("u(n)/(u(n)+1)").den() == MPoly::var(seq_var("u", 0)) + 1);
}

TEST_CASE("parameters, symbols and classification") {
  ParseOptions o;
  o.params = {"l"};
  auto b = parse_diffpoly(fx::babylonian, o);
  CHECK(b.body().contains(param_var("l")));
  CHECK_THROWS_AS(parse_diffpoly(fx::babylonian), ParseError);

  ParseOptions x;
  x.symbols["X"] = MPoly::var(seq_var("u", 0));
  CHECK(parse_expression("X^2 + 1", x).num() == MPoly::var(seq_var("u", 0)).pow(2) + 1);

  CHECK(parse_equation("c1(n)*s(n+1) + c0(n)*s(n)").kind == EquationKind::MultiSequence);
  CHECK(parse_equation(fx::arctan_holo).kind == EquationKind::Holonomic);
  CHECK(parse_equation(fx::somos_holo).kind == EquationKind::Holonomic);
}

TEST_CASE("syntax errors carry a position") {
  for (const char* bad : {"s(n+1) +", "s(n+1)) - s(n)", "s(n+-1)", "s(m+1)", "s(n)^-2", "2*/s(n)", "s(n) = = 1",
                          "s(n)/(s(n)-s(n))", "foo(n", "n(n+1)", "s(n)^(1/2)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_equation(bad), ParseError);
  }
  try {
    parse_diffpoly("s(n+1) + $");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position == 9);
  }
  // n together with nonlinear sequence terms
  CHECK_THROWS_AS(parse_equation("n*s(n+1)*s(n) - 1"), ParseError);
}

TEST_CASE("rendering") {
  CHECK(render_equation(DiffPoly(MPoly())) == "0 = 0");
  auto c = normalize(parse_diffpoly(fx::catalan_rat));
  CHECK(render_solved(c) == "s(n+2) = 2*s(n+1)*(8*s(n)+s(n+1))/(10*s(n)-s(n+1))");
  CHECK(render_solved(parse_diffpoly("s(n+1) - 2*s(n)")) == "s(n+1) = 2*s(n)");
  // non-rationalizing input falls back to the equation
  CHECK(render_solved(parse_diffpoly("s(n+1)^2 - s(n)")) == render_equation(parse_diffpoly("s(n+1)^2 - s(n)")));
  auto st = normalize(parse_diffpoly(fx::catalan_stride3));
  CHECK(st.body().size() == 16);
  CHECK(parse_diffpoly(render(st.body())) == st);
}

TEST_CASE("parse of render is the identity on the fixture corpus") {
  ParseOptions o;
  o.params = {"l", "a00", "a01", "a10", "a11"};
  for (const char* e : {fx::factorial, fx::factorial_ratio, fx::bernoulli, fx::bernoulli_cont, fx::interlace_a,
                        fx::interlace_b, fx::interlace_q, fx::catalan_rat, fx::arctan_rat, fx::somos_rat, fx::pow_fib,
                        fx::trees, fx::ratio_uv, fx::product_uv, fx::partial_sum_u, fx::fibonacci,
                        fx::fib_recip_product, fx::fib_partial_sum, fx::fib_aitken, fx::babylonian,
                        fx::babylonian_aitken, fx::c2_generic_body, fx::c2_generic_num, fx::c2_generic_den,
                        fx::c2_specialized, fx::c2_period_body, fx::c2_period_out, fx::catalan_stride3,
                        fx::catalan_holo, fx::arctan_holo, fx::somos_holo}) {
    CAPTURE(e);
    DiffPoly p = normalize(parse_diffpoly(e, o));
    CHECK(normalize(parse_diffpoly(render(p.body()), o)) == p);
    CHECK(normalize(parse_diffpoly(render_equation(p), o)) == p);
    if (is_rationalizing(p)) CHECK(normalize(parse_diffpoly(render_solved(p), o)) == p);
  }
}

TEST_CASE("parse of render on random polynomials") {
  std::mt19937_64 rng(5);
  std::vector<VarId> vars{seq_var("s", 0), seq_var("s", 1), seq_var("s", 3), seq_var("u", 2), index_var(),
                          param_var("l")};
  ParseOptions o;
  o.params = {"l"};
  for (int i = 0; i < 200; ++i) {
    MPoly p = testsupport::random_poly(rng, vars, 1 + i % 7, 4);
    std::uniform_int_distribution<int> d(1, 12);
    Rational k(d(rng), d(rng));
    k.canonicalize();
    p *= k;
    if (p.is_zero()) continue;
    RatExpr r = parse_expression(render(p), o);
    CHECK(r.num() * Rational(1 / r.den().constant_term()) == p);
  }
}

TEST_CASE("term files") {
  TermTable t = TermTable::from_rationals(3, {Rational(7847, 10140), Rational(-2), Rational(0)});
  std::stringstream ss;
  write_terms(ss, t);
  CHECK(ss.str() == "3: 7847/10140\n4: -2\n5: 0\n");
  auto back = read_terms(ss);
  CHECK(back.start == 3);
  REQUIRE(back.size() == 3);
  CHECK(back.at(3) == Coefficient(Rational(7847, 10140)));

  std::stringstream gap("0: 1\n2: 3\n");
  CHECK_THROWS_AS(read_terms(gap), ParseError);
  std::stringstream junk("# comment\n\n0: 1/2\n1 2\n");
  CHECK_THROWS_AS(read_terms(junk), ParseError);
  std::stringstream sym("0: l/2\n1: 1/l\n");
  auto p = read_terms(sym, {"l"});
  CHECK_FALSE(p.at(0).is_rational());
}
