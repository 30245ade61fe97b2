#include <doctest.h>

#include <random>

#include "dalg/errors.hpp"
#include "dalg/parse.hpp"
#include "dalg/polyalg.hpp"
#include "dalg/seqeval.hpp"
#include "dalg/subseq.hpp"
#include "fixtures.hpp"

using namespace dalg;

namespace {

std::vector<Rational> catalan(int count) {
  std::vector<Rational> c{1};
  for (int k = 0; k + 1 < count; ++k) c.push_back(c.back() * (4 * k + 2) / (k + 2));
  return c;
}

std::vector<Rational> fibonacci(int count) {
  std::vector<Rational> f{0, 1};
  while (static_cast<int>(f.size()) < count) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

TermTable every(const TermTable& t, int d, int offset = 0) {
  TermTable out;
  for (int i = t.start + offset; i < t.end(); i += d) out.terms.push_back(t.at(i));
  return out;
}

TermTable every(const std::vector<Rational>& v, int d, int offset = 0) {
  return every(TermTable::from_rationals(0, v), d, offset);
}

int count_origin(const DynSystem& s, const std::string& o) {
  int c = 0;
  for (auto& st : s.states) c += st.origin == o;
  return c;
}

}  // namespace

TEST_CASE("catalan numbers at multiples of three") {
  auto r = subsequence(parse_diffpoly(fx::catalan_rat), 3);
  CHECK(r.stride.polynomial == normalize(parse_diffpoly(fx::catalan_stride3)));
  CHECK(r.stride.order == 2);
  CHECK(r.stride.degree == 6);
  Monomial m({{seq_var("s", 0), 3}, {seq_var("s", 1), 3}});
  CHECK(r.stride.polynomial.body().coefficient(seq_var("s", 0), 3).coefficient(seq_var("s", 1), 3).constant_term() ==
        Rational(343597383680));
  auto c = catalan(61);
  auto v = verify(r.stride.polynomial, every(c, 3));
  CHECK(v.ok);
  CHECK(v.positions == 19);
  // stride-one reading of the same polynomial fails on C(n) itself
  CHECK_FALSE(verify(r.stride.polynomial, TermTable::from_rationals(0, c)).ok);
  // the sigma form holds along C(n) and C(n+1), ...
  auto w = verify(r.sigma_form, TermTable::from_rationals(0, c));
  CHECK(w.ok);
  CHECK(w.positions == 55);
}

TEST_CASE("catalan system has two composed states") {
  auto sys = subsequence_system(parse_diffpoly(fx::catalan_rat), 3);
  CHECK(sys.dimension() == 2);
  CHECK(count_origin(sys, "closing") == 2);
  CHECK(sys.rationalizing());
}

TEST_CASE("dimension audit matches the order") {
  for (int r = 1; r <= 5; ++r)
    for (int d = 1; d <= 4; ++d) {
      std::string e = "s(n+" + std::to_string(r) + ") - s(n)*s(n+" + std::to_string(r - 1) + ") - 1";
      auto sys = subsequence_system(parse_diffpoly(e), d);
      CHECK(sys.dimension() == r);
      CHECK(count_origin(sys, "transport") == std::max(r - d, 0));
      CHECK(count_origin(sys, "closing") == std::min(r, d));
    }
}

TEST_CASE("fibonacci at even indices") {
  auto r = subsequence(parse_diffpoly(fx::fibonacci), 2);
  CHECK(r.stride.polynomial == normalize(parse_diffpoly("s(n+2) - 3*s(n+1) + s(n)")));
  auto v = verify(r.stride.polynomial, every(fibonacci(64), 2));
  CHECK(v.ok);
  CHECK(v.positions >= 30);
  CHECK(r.sigma_form == normalize(parse_diffpoly("s(n+4) - 3*s(n+2) + s(n)")));
}

TEST_CASE("stride one gives back the input") {
  for (const char* e : {fx::catalan_rat, fx::fibonacci, fx::factorial, "s(n+1)^2 - s(n) - 1"}) {
    auto r = subsequence(parse_diffpoly(e), 1);
    CHECK(r.stride.polynomial == normalize(parse_diffpoly(e)));
  }
}

TEST_CASE("offset changes the window, not the equation") {
  auto p = parse_diffpoly(fx::fibonacci);
  auto a = subsequence(p, 3);
  auto b = subsequence(p, 3, SubseqOptions{{}, 1});
  CHECK(a.stride.polynomial == b.stride.polynomial);
  CHECK(verify(b.stride.polynomial, every(fibonacci(90), 3, 1)).ok);
  CHECK(verify(b.stride.polynomial, every(fibonacci(90), 3, 2)).ok);
}

TEST_CASE("non-rationalizing input goes through the implicit system") {
  // vanishes on Fibonacci numbers through its first factor
  auto p = parse_diffpoly("(s(n+2) - s(n+1) - s(n))*(s(n+2) + 1)");
  auto sys = subsequence_system(p, 2);
  CHECK_FALSE(sys.rationalizing());
  CHECK(sys.dimension() == 2);
  auto r = subsequence(p, 2);
  CHECK(r.stride.order <= 2);
  CHECK(verify(r.stride.polynomial, every(fibonacci(64), 2)).ok);
  CHECK_THROWS_AS(subsequence(p, 3), std::invalid_argument);
}

TEST_CASE("random initial values at strides two and three") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(1, 9), den(1, 4);
  for (const char* e : {fx::catalan_rat, fx::fibonacci, fx::factorial, "s(n+1)*(s(n)+2) - 3*s(n) - 1",
                         "s(n+2)*(2*s(n)+3) - s(n+1) - 4*s(n)"})
    for (int d : {2, 3}) {
      auto p = parse_diffpoly(e);
      auto r = subsequence(p, d);
      int ord = order(p);
      CHECK(r.stride.order <= ord);
      int window = 8;
      TermTable t;
      // redraw initials that run into a vanishing denominator
      for (int attempt = 0; attempt < 20 && t.size() == 0; ++attempt) {
        std::vector<Coefficient> init;
        for (int k = 0; k < ord; ++k) {
          Rational q(num(rng), den(rng));
          q.canonicalize();
          init.emplace_back(q);
        }
        try {
          t = unroll(SeqSpec{{p}, "s", 0, init, {}}, d * (window + r.stride.order));
        } catch (const DegenerateError&) {
        }
      }
      REQUIRE(t.size() > 0);
      auto v = verify(r.stride.polynomial, every(t, d));
      CHECK_MESSAGE(v.ok, e);
      CHECK(v.positions >= window);
    }
}
