#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>

#include "dalg/c2finite.hpp"
#include "dalg/closure.hpp"
#include "dalg/errors.hpp"
#include "dalg/holonomic.hpp"
#include "dalg/parse.hpp"
#include "dalg/render.hpp"
#include "dalg/seqeval.hpp"
#include "dalg/subseq.hpp"

using namespace dalg;

namespace {

struct Globals {
  std::vector<std::string> params;
  bool solved = false;
  unsigned max_degree = GroebnerLimits{}.max_degree;
  std::size_t max_basis = GroebnerLimits{}.max_basis;
  std::uint64_t seed = 1;
  std::string out = "s";

  ParseOptions parse() const {
    ParseOptions o;
    o.params = params;
    return o;
  }
  ClosureOptions closure() const {
    ClosureOptions o;
    o.limits.max_degree = max_degree;
    o.limits.max_basis = max_basis;
    o.seed = seed;
    o.out = out;
    return o;
  }
};

std::string show(const DiffPoly& p, bool solved) { return solved ? render_solved(p) : render_equation(p); }

void print(const ClosureResult& r, const Globals& g) {
  std::cout << show(r.polynomial, g.solved) << "\n";
  std::cout << "# order " << r.order << ", degree " << r.degree << ", bound " << r.bound << "\n";
  for (auto& c : r.side_conditions) std::cout << "# assuming " << render(c) << " != 0\n";
}

DiffPoly single(const std::string& text, const Globals& g) {
  auto e = parse_equation(text, g.parse());
  if (e.kind != EquationKind::Difference) throw ParseError("expected an equation in one sequence without n", 0);
  if (e.poly.is_constant()) throw ParseError("equation has no sequence term", 0);
  return e.poly;
}

std::string only_sequence(const DiffPoly& p) {
  auto s = p.sequences();
  if (s.size() != 1) throw ParseError("expected exactly one sequence", 0);
  return s[0];
}

int arith_cmd(const std::string& f, const std::vector<std::string>& eqs, const Globals& g) {
  std::vector<DiffPoly> in;
  std::set<std::string> names;
  for (auto& e : eqs) {
    in.push_back(single(e, g));
    names.insert(only_sequence(in.back()));
  }
  // inputs sharing a name become x1, x2, ...
  bool rename = names.size() != in.size();
  ParseOptions fo = g.parse();
  const char* alias[] = {"X", "Y", "Z"};
  for (std::size_t i = 0; i < in.size(); ++i) {
    std::string name = only_sequence(in[i]);
    if (rename) {
      std::string to = "x" + std::to_string(i + 1);
      in[i] = rename_sequence(in[i], name, to);
      name = to;
    }
    MPoly head = MPoly::var(seq_var(name, 0));
    fo.symbols["X" + std::to_string(i + 1)] = head;
    if (i < 3 && in.size() <= 3) fo.symbols[alias[i]] = head;
  }
  print(arith(in, parse_expression(f, fo), g.closure()), g);
  return 0;
}

int holo_cmd(const std::string& eq, const Globals& g) {
  auto e = parse_equation(eq, g.parse());
  if (!e.holo) throw ParseError("expected a linear recurrence with coefficients in n", 0);
  auto r = holo_to_ratrec(*e.holo);
  if (g.out != "s") {
    r.polynomial = rename_sequence(r.polynomial, r.seq, g.out);
    r.seq = g.out;
  }
  print(r, g);
  return 0;
}

int c2_cmd(const std::string& eq, const std::vector<std::string>& rules, const Globals& g) {
  C2Eq c;
  c.body = parse_diffpoly(eq, g.parse());
  std::set<std::string> ruled;
  for (auto& r : rules) {
    auto colon = r.find(':');
    if (colon == std::string::npos) throw ParseError("rule must read <symbol>:<equation>", 0);
    auto rule = CFiniteRule::from_diffpoly(parse_diffpoly(r.substr(colon + 1), g.parse()));
    if (rule.seq != r.substr(0, colon))
      throw ParseError("rule for " + r.substr(0, colon) + " constrains " + rule.seq, colon);
    ruled.insert(rule.seq);
    c.rules.push_back(std::move(rule));
  }
  std::vector<std::string> main;
  for (auto& s : c.body.sequences())
    if (!ruled.count(s)) main.push_back(s);
  if (main.size() != 1) throw ParseError("every sequence but one needs a --rule", 0);
  c.seq = main[0];
  C2Options o;
  o.out = g.out;
  print(c2f_to_ratrec(c, o), g);
  return 0;
}

int subseq_cmd(const std::string& eq, int d, int offset, const Globals& g) {
  SubseqOptions o;
  o.closure = g.closure();
  o.offset = offset;
  auto r = subsequence(single(eq, g), d, o);
  print(r.stride, g);
  std::cout << "# along the original sequence: " << render_equation(r.sigma_form) << "\n";
  return 0;
}

std::vector<DiffPoly> factors(const std::string& text, const Globals& g) {
  std::vector<DiffPoly> out;
  for (auto& part : split_list(text)) out.push_back(single(part, g));
  return out;
}

int unroll_cmd(const std::string& eqs, const std::string& init, int count, int start, const std::string& policy,
               const Globals& g) {
  SeqSpec spec;
  spec.factors = factors(eqs, g);
  spec.seq = only_sequence(spec.factors[0]);
  spec.start = start;
  for (auto& v : split_list(init)) {
    RatExpr x = parse_expression(v, g.parse());
    spec.initial.push_back(Coefficient::quotient(x.num(), x.den()));
  }
  spec.roots.policy = parse_root_policy(policy);
  write_terms(std::cout, unroll(spec, count));
  return 0;
}

TermTable load(const std::string& path, const Globals& g) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  return read_terms(in, g.params);
}

int verify_cmd(const std::string& eq, const std::string& terms, const Globals& g) {
  DiffPoly p = single(eq, g);
  auto v = verify(p, load(terms, g), only_sequence(p));
  if (v.ok) {
    std::cout << "ok: " << v.positions << " positions\n";
    return 0;
  }
  std::cout << "fails at position " << v.failing_index << ": residual " << render(v.residual) << "\n";
  return 1;
}

int regularity_cmd(const std::string& eq, const std::string& terms, const Globals& g) {
  DiffPoly p = single(eq, g);
  auto t = load(terms, g);
  auto bad = check_regularity(p, t, only_sequence(p));
  if (bad.empty()) {
    std::cout << "regular at every position\n";
    return 0;
  }
  std::cout << "initial vanishes at positions";
  for (std::size_t i = 0; i < bad.size(); ++i) std::cout << (i ? ", " : " ") << bad[i];
  std::cout << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic on difference-algebraic sequences"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::string params;
  app.add_option("--params", params, "symbolic parameters, comma separated");
  app.add_flag("--solved", g.solved, "print rationalizing results solved for the top shift");
  app.add_option("--max-degree", g.max_degree, "Groebner S-pair degree cap");
  app.add_option("--max-basis", g.max_basis, "Groebner basis size cap");
  app.add_option("--seed", g.seed, "seed of the randomized sampling");
  app.add_option("--out", g.out, "name of the output sequence");

  std::string f, eq, terms, init, policy = "unique";
  std::vector<std::string> eqs, rules;
  int d = 1, offset = 0, count = 0, start = 0;

  auto* ar = app.add_subcommand("arith", "equation for f applied to solutions of the inputs");
  ar->add_option("--f", f, "rational expression in X1..XN (X, Y, Z) or the input terms")->required();
  ar->add_option("eqs", eqs, "input equations")->required();
  auto* ho = app.add_subcommand("holo2rat", "holonomic recurrence to a rational recursion");
  ho->add_option("eq", eq)->required();
  auto* c2 = app.add_subcommand("c2f2rat", "C2-finite recurrence to a rational recursion");
  c2->add_option("eq", eq)->required();
  c2->add_option("--rule", rules, "<symbol>:<C-finite equation>")->required();
  auto* ss = app.add_subcommand("subseq", "equation for s(d*n + offset)");
  ss->add_option("eq", eq)->required();
  ss->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  ss->add_option("--offset", offset)->check(CLI::NonNegativeNumber);
  auto* un = app.add_subcommand("unroll", "terms from initial values; factors separated by commas");
  un->add_option("eq", eq)->required();
  un->add_option("--init", init, "initial values, comma separated")->required();
  un->add_option("--count", count, "total number of terms")->required()->check(CLI::NonNegativeNumber);
  un->add_option("--start", start, "index of the first initial value");
  un->add_option("--policy", policy, "unique, positive-discriminant, smallest or largest");
  auto* ve = app.add_subcommand("verify", "check an equation along a term file");
  ve->add_option("eq", eq)->required();
  ve->add_option("--terms", terms)->required();
  auto* re = app.add_subcommand("regularity", "positions where the initial vanishes");
  re->add_option("eq", eq)->required();
  re->add_option("--terms", terms)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }
  if (!params.empty()) g.params = split_list(params);
  try {
    if (*ar) return arith_cmd(f, eqs, g);
    if (*ho) return holo_cmd(eq, g);
    if (*c2) return c2_cmd(eq, rules, g);
    if (*ss) return subseq_cmd(eq, d, offset, g);
    if (*un) return unroll_cmd(eq, init, count, start, policy, g);
    if (*ve) return verify_cmd(eq, terms, g);
    if (*re) return regularity_cmd(eq, terms, g);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const DegenerateError& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return 1;
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
