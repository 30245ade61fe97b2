#include "dalg/parse.hpp"

#include <algorithm>
#include <cctype>

#include "dalg/errors.hpp"
#include "dalg/polyalg.hpp"

namespace dalg {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const ParseOptions& o) : s_(s), opt_(o) {}

  RatExpr expr() {
    RatExpr acc = term();
    for (;;) {
      skip();
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  bool at_end() {
    skip();
    return i_ >= s_.size();
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  std::size_t pos() const { return i_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  RatExpr term() {
    RatExpr acc = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        std::size_t at = i_;
        RatExpr d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatExpr factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    RatExpr base = atom();
    if (eat('^')) {
      skip();
      if (i_ < s_.size() && s_[i_] == '-') fail("negative exponent");
      Integer e = integer();
      if (e > 100000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer integer() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) fail("expected an integer");
    return Integer(std::string(s_.substr(b, i_ - b)));
  }

  std::string ident() {
    std::size_t b = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    return std::string(s_.substr(b, i_ - b));
  }

  RatExpr atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      RatExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MPoly(Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = i_;
      std::string name = ident();
      skip();
      if (i_ < s_.size() && s_[i_] == '(') {
        if (name == "n") throw ParseError("'n' is not a sequence name", at);
        ++i_;
        skip();
        if (ident() != "n") fail("expected 'n' inside a sequence term");
        long k = 0;
        if (eat('+')) {
          Integer v = integer();
          if (v > 1000000) fail("shift too large");
          k = v.get_si();
        } else if (eat('-')) {
          fail("negative shifts are not allowed");
        }
        if (!eat(')')) fail("expected ')'");
        return MPoly::var(seq_var(name, static_cast<int>(k)));
      }
      if (auto it = opt_.symbols.find(name); it != opt_.symbols.end()) return it->second;
      if (name == "n") return MPoly::var(index_var());
      if (std::find(opt_.params.begin(), opt_.params.end(), name) != opt_.params.end())
        return MPoly::var(param_var(name));
      throw ParseError("unknown identifier '" + name + "' (declare parameters with --params)", at);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const ParseOptions& opt_;
  std::size_t i_ = 0;
};

}  // namespace

RatExpr parse_expression(std::string_view text, const ParseOptions& opt) {
  Parser p(text, opt);
  RatExpr e = p.expr();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return e;
}

DiffPoly parse_diffpoly(std::string_view text, const ParseOptions& opt) {
  Parser p(text, opt);
  RatExpr lhs = p.expr();
  RatExpr rhs;
  if (p.eat('=')) rhs = p.expr();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return DiffPoly((lhs - rhs).num());
}

ParsedEquation parse_equation(std::string_view text, const ParseOptions& opt) {
  ParsedEquation out;
  out.poly = parse_diffpoly(text, opt);
  if (out.poly.has_index()) {
    out.kind = EquationKind::Holonomic;
    try {
      out.holo = HoloEq::from_diffpoly(out.poly);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("mixed-mode input: ") + e.what(), 0);
    }
  } else if (out.poly.sequences().size() > 1) {
    out.kind = EquationKind::MultiSequence;
  }
  return out;
}

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t b = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == sep && depth == 0)) {
      std::string item(text.substr(b, i - b));
      auto l = item.find_first_not_of(" \t");
      auto r = item.find_last_not_of(" \t");
      if (l != std::string::npos) out.push_back(item.substr(l, r - l + 1));
      b = i + 1;
    }
  }
  return out;
}

}  // namespace dalg
