#include "dalg/render.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "dalg/errors.hpp"
#include "dalg/parse.hpp"
#include "dalg/polyalg.hpp"

namespace dalg {

std::string render(const Rational& q) { return q.get_str(); }

namespace {

std::string render_monomial(const Monomial& m) {
  auto f = m.factors();
  std::sort(f.begin(), f.end(), [](auto& a, auto& b) { return compare_rank(a.first, b.first) > 0; });
  // Parameters first, then n, then sequence terms from the top down.
  std::stable_partition(f.begin(), f.end(), [](auto& x) { return var_info(x.first).kind == VarKind::Param; });
  std::string out;
  for (auto& [v, e] : f) {
    if (!out.empty()) out += '*';
    out += var_info(v).name;
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string wrap(const MPoly& p) {
  std::string s = render(p);
  if (p.size() > 1 || (p.size() == 1 && !p.lead().first.is_one() && p.lead().second != 1) ||
      (p.is_constant() && sgn(p.constant_term()) < 0) || s.find('/') != std::string::npos)
    return "(" + s + ")";
  return s;
}

// content*monomial*(rest), content positive.
std::vector<std::string> factored_parts(const MPoly& p) {
  if (p.size() <= 1) return {render(p)};
  Rational c = content(p);
  Monomial mc = monomial_content(p);
  MPoly rest;
  {
    std::vector<MPoly::Term> t;
    for (auto& [m, k] : p.terms()) t.emplace_back(m / mc, Rational(k / c));
    rest = MPoly::from_terms(std::move(t));
  }
  std::vector<std::string> parts;
  if (c != 1) parts.push_back(render(c));
  if (!mc.is_one()) parts.push_back(render_monomial(mc));
  if (!(rest == MPoly(1))) parts.push_back(rest.size() > 1 ? "(" + render(rest) + ")" : render(rest));
  return parts;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (auto& s : parts) out += (out.empty() ? "" : "*") + s;
  return out;
}

}  // namespace

std::string render(const Coefficient& c) {
  if (c.is_rational()) return render(c.rational());
  MPoly d = c.den();
  if (d == MPoly(1)) return render(c.num());
  return wrap(c.num()) + "/" + wrap(d);
}

std::string render(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<const MPoly::Term*> terms;
  for (auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [](auto* a, auto* b) { return canonical_compare(a->first, b->first) < 0; });
  std::string out;
  for (auto* t : terms) {
    const Rational& c = t->second;
    bool neg = sgn(c) < 0;
    Rational a = abs(c);
    std::string mono = render_monomial(t->first);
    std::string body;
    if (mono.empty()) body = render(a);
    else if (a == 1) body = mono;
    else body = render(a) + "*" + mono;
    if (out.empty()) out = neg ? "-" + body : body;
    else out += (neg ? "-" : "+") + body;
  }
  return out;
}

std::string render_equation(const DiffPoly& p) { return render(p.body()) + " = 0"; }

std::string render_solved(const DiffPoly& p) {
  if (p.is_constant() || !is_rationalizing(p)) return render_equation(p);
  VarId top = top_var(p);
  auto cs = p.body().coefficients(top);
  MPoly num = -cs[0], den = cs[1];
  if (num.is_zero()) return var_info(top).name + " = 0";
  if (sgn(canonical_lead(num).second) < 0) {
    num = -num;
    den = -den;
  }
  if (den.is_constant()) return var_info(top).name + " = " + join(factored_parts(num * Rational(1 / den.constant_term())));
  std::string out = var_info(top).name + " = " + join(factored_parts(num));
  auto d = factored_parts(den);
  bool single = d.size() == 1 && d[0].find_first_of("*/-") == std::string::npos;
  if (d.size() == 1 && d[0].front() == '(') single = true;
  return out + "/" + (single ? d[0] : "(" + join(d) + ")");
}

void write_terms(std::ostream& out, const TermTable& t) {
  for (int i = t.start; i < t.end(); ++i) out << i << ": " << render(t.at(i)) << "\n";
}

TermTable read_terms(std::istream& in, const std::vector<std::string>& params) {
  TermTable t;
  bool first = true;
  std::string line;
  int lineno = 0;
  ParseOptions opt;
  opt.params = params;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("term file line " + std::to_string(lineno) + ": missing ':'", 0);
    int idx;
    try {
      idx = std::stoi(line.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError("term file line " + std::to_string(lineno) + ": bad index", 0);
    }
    if (first) {
      t.start = idx;
      first = false;
    } else if (idx != t.end()) {
      throw ParseError("term file line " + std::to_string(lineno) + ": indices must be contiguous", 0);
    }
    RatExpr v = parse_expression(line.substr(colon + 1), opt);
    for (auto* q : {&v.num(), &v.den()})
      for (auto x : q->variables())
        if (!is_param(x)) throw ParseError("term file line " + std::to_string(lineno) + ": not a constant", 0);
    t.terms.push_back(v.den() == MPoly(1) && v.num().is_constant() ? Coefficient(v.num().constant_term())
                                                                   : Coefficient::quotient(v.num(), v.den()));
    t.notes.push_back("given");
  }
  return t;
}

}  // namespace dalg
