#include <doctest.h>

#include "dalg/errors.hpp"
#include "dalg/parse.hpp"
#include "dalg/seqeval.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace dalg;
using testsupport::n;

namespace {

MPoly X() { return MPoly::var(param_var("X")); }

SeqSpec spec_of(std::vector<const char*> factors, std::vector<Coefficient> init) {
  SeqSpec s;
  for (auto f : factors) s.factors.push_back(parse_diffpoly(f));
  s.initial = std::move(init);
  return s;
}

}  // namespace

TEST_CASE("rational roots") {
  auto q = (108300 * X() - 83797) * (10140 * X() - 7847);
  auto r = rational_roots(q);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Rational(83797, 108300));
  CHECK(r[1] == Rational(7847, 10140));
  CHECK(rational_roots(X() * X() + 1).empty());
  CHECK(rational_roots(X().pow(3) - 6 * X() * X() + 11 * X() - 6) == std::vector<Rational>{1, 2, 3});
  // multiplicities and a zero root
  CHECK(rational_roots(X().pow(2) * (2 * X() - 1).pow(3)) ==
        std::vector<Rational>{0, 0, Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  // big coefficients
  Rational a("123456789012345678901/98765432109876543");
  a.canonicalize();
  auto big = (Rational(a.get_den()) * X() - Rational(a.get_num())) * (X() * X() - 2);
  auto br = rational_roots(big);
  REQUIRE(br.size() == 1);
  CHECK(br[0] == a);
}

TEST_CASE("rational roots agree with brute force on random quadratics") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int it = 0; it < 200; ++it) {
    std::vector<Rational> c{d(rng), d(rng), d(rng)};
    if (c[2] == 0) c[2] = 1;
    std::vector<Rational> want;
    // divisors of small integers, every candidate p/q
    for (int p = -900; p <= 900; ++p)
      for (int qd = 1; qd <= 30; ++qd) {
        if (gcd(Integer(p), Integer(qd)) != 1) continue;
        Rational x(p, qd);
        if (c[0] + c[1] * x + c[2] * x * x == 0) want.push_back(x);
      }
    std::sort(want.begin(), want.end());
    auto got = rational_roots(c);
    got.erase(std::unique(got.begin(), got.end()), got.end());
    CHECK(got == want);
  }
}

TEST_CASE("unroll factorials") {
  auto t = unroll(spec_of({fx::factorial}, {1, 1}), 6);
  std::vector<long> want{1, 1, 2, 6, 24, 120};
  for (int i = 0; i < 6; ++i) CHECK(t.at(i) == Coefficient(want[i]));
  CHECK(t.notes[0] == "initial");
}

TEST_CASE("non-rationalizing step with the positive-discriminant policy") {
  auto s = spec_of({fx::fib_aitken}, {Rational(7, 9), Rational(58, 75), Rational(743, 960)});
  CHECK_THROWS_AS(unroll(s, 4), DegenerateError);  // two rational roots
  s.roots.policy = RootPolicy::PositiveDiscriminant;
  auto t = unroll(s, 4);
  CHECK(t.at(3) == Coefficient(Rational(7847, 10140)));
  s.roots.policy = RootPolicy::Smallest;
  CHECK(unroll(s, 4).at(3) == Coefficient(Rational(83797, 108300)));
  s.roots.policy = RootPolicy::ByPredicate;
  s.roots.predicate = [](const Rational& r) { return r > Rational(7738, 10000); };
  CHECK(unroll(s, 4).at(3) == Coefficient(Rational(7847, 10140)));
}

TEST_CASE("polymorphic interlaced sequence") {
  auto t = unroll(spec_of({fx::interlace_a, fx::interlace_b}, {1}), 25);
  for (int i = 0; i < 25; ++i) CHECK(t.at(i) == Coefficient(Rational(i % 2 ? -1 : 1, 2 * i + 1)));
  // same for the single rationalizing polynomial
  CHECK(verify(parse_diffpoly(fx::interlace_q), t).ok);
}

TEST_CASE("polymorphic continuation of the Bernoulli numbers") {
  auto t = unroll(spec_of({fx::bernoulli_cont, "s(n+2)"}, {1, Rational(-1, 2), Rational(1, 6), 0}), 12);
  CHECK(t.at(6) == Coefficient(Rational(91, 3750)));
  CHECK(t.at(8) == Coefficient(Rational(-423241, 11718750)));
  CHECK(t.at(10) == Coefficient(Rational(85414689451, 915527343750)));
  CHECK(t.at(9) == Coefficient(0));
  // a generic zero of the Bernoulli relation
  CHECK(verify(parse_diffpoly(fx::bernoulli), t).ok);
}

TEST_CASE("ambiguous factor lists are rejected") {
  // both factors vanish along the constant zero sequence
  CHECK_THROWS_AS(unroll(spec_of({"s(n+1)", "s(n+1)-2*s(n)"}, {0}), 6), DegenerateError);
}

TEST_CASE("stepping errors report the index") {
  // initial vanishes at the first step
  try {
    unroll(spec_of({fx::factorial}, {0, 1}), 5);
    FAIL("expected an error");
  } catch (const DegenerateError& e) {
    CHECK(std::string(e.what()).find("position 0") != std::string::npos);
  }
  CHECK_THROWS_AS(unroll(spec_of({"s(n+1)^2 - 2"}, {1}), 3), DegenerateError);
  CHECK_THROWS_AS(unroll(spec_of({fx::factorial}, {1}), 3), std::invalid_argument);
}

TEST_CASE("index-dependent equations unroll with n") {
  auto t = unroll(spec_of({"(n+2)*s(n+1) - (4*n+2)*s(n)"}, {1}), 10);
  CHECK(t.at(9) == Coefficient(4862));
}

TEST_CASE("verify") {
  auto b = TermTable::from_rationals(0, std::vector<Rational>(bernoulli_fixture().begin(), bernoulli_fixture().begin() + 11));
  CHECK(verify(parse_diffpoly(fx::bernoulli), b).ok);
  auto v = verify(parse_diffpoly(fx::factorial), TermTable::from_rationals(0, {1, 1, 2, 7}));
  CHECK_FALSE(v.ok);
  CHECK(v.failing_index == 1);
  CHECK(v.residual == Coefficient(1));
  CHECK_THROWS_AS(verify(parse_diffpoly(fx::factorial), TermTable::from_rationals(0, {1, 1})), std::invalid_argument);
}

TEST_CASE("regularity audit") {
  auto b = TermTable::from_rationals(0, bernoulli_fixture());
  auto bad = check_regularity(parse_diffpoly(fx::bernoulli), b);
  std::vector<int> odd;
  for (int i = 3; i + 3 <= 20; i += 2) odd.push_back(i);
  CHECK(bad == odd);
  auto f = unroll(spec_of({fx::factorial}, {1, 1}), 20);
  CHECK(check_regularity(parse_diffpoly(fx::factorial), f).empty());
  CHECK(check_regularity(parse_diffpoly(fx::fibonacci), f).empty());
}

TEST_CASE("symbolic initial values stay exact") {
  SeqSpec s = spec_of({fx::factorial}, {1, Coefficient::param("k")});
  auto t = unroll(s, 4);
  // s(2) = k(1+k), s(3) = k(1+k)(k + k(1+k))/k
  auto k = MPoly::var(param_var("k"));
  CHECK(t.at(2) == Coefficient::quotient(k * (k + 1), 1));
  CHECK(t.at(3) == Coefficient::quotient(k * (k + 1) * (k * k + 2 * k), k));
}
