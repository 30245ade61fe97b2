#include "dalg/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dalg {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!f_.empty() && f_.back().first == v)
      f_.back().second += e;
    else
      f_.emplace_back(v, e);
  }
}

Monomial Monomial::var(VarId v, std::uint32_t e) {
  Monomial m;
  if (e) m.f_.emplace_back(v, e);
  return m;
}

std::uint32_t Monomial::degree(VarId v) const {
  auto it = std::lower_bound(f_.begin(), f_.end(), Factor{v, 0});
  return it != f_.end() && it->first == v ? it->second : 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (auto& f : f_) d += f.second;
  return d;
}

bool Monomial::divides(const Monomial& o) const {
  auto j = o.f_.begin();
  for (auto& [v, e] : f_) {
    while (j != o.f_.end() && j->first < v) ++j;
    if (j == o.f_.end() || j->first != v || j->second < e) return false;
  }
  return true;
}

namespace {
template <class Op>
Monomial merge(const std::vector<Monomial::Factor>& a, const std::vector<Monomial::Factor>& b, Op op,
               bool keep_single) {
  std::vector<Monomial::Factor> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      if (keep_single) r.push_back(a[i]);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      if (keep_single) r.push_back(b[j]);
      ++j;
    } else {
      std::uint32_t e = op(a[i].second, b[j].second);
      if (e) r.emplace_back(a[i].first, e);
      ++i, ++j;
    }
  }
  return Monomial(std::move(r));
}
}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  return merge(a.f_, b.f_, [](auto x, auto y) { return x + y; }, true);
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> r;
  auto j = b.f_.begin();
  for (auto& [v, e] : a.f_) {
    std::uint32_t sub = 0;
    if (j != b.f_.end() && j->first == v) sub = (j++)->second;
    if (sub > e) throw std::invalid_argument("monomial division is not exact");
    if (e - sub) r.emplace_back(v, e - sub);
  }
  if (j != b.f_.end()) throw std::invalid_argument("monomial division is not exact");
  Monomial m;
  m.f_ = std::move(r);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return merge(a.f_, b.f_, [](auto x, auto y) { return std::min(x, y); }, false);
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return merge(a.f_, b.f_, [](auto x, auto y) { return std::max(x, y); }, true);
}

int storage_compare(const Monomial& a, const Monomial& b) {
  auto& x = a.factors();
  auto& y = b.factors();
  std::size_t i = x.size(), j = y.size();
  while (i > 0 && j > 0) {
    auto& fa = x[i - 1];
    auto& fb = y[j - 1];
    if (fa.first != fb.first) return fa.first > fb.first ? 1 : -1;
    if (fa.second != fb.second) return fa.second > fb.second ? 1 : -1;
    --i, --j;
  }
  if (i) return 1;
  if (j) return -1;
  return 0;
}

MPoly::MPoly(const Rational& c) {
  if (sgn(c) != 0) t_.emplace_back(Monomial(), c);
}

MPoly MPoly::var(VarId v, std::uint32_t e) { return monomial(Monomial::var(v, e), 1); }

MPoly MPoly::monomial(Monomial m, Rational c) {
  MPoly p;
  if (sgn(c) != 0) p.t_.emplace_back(std::move(m), std::move(c));
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return storage_compare(a.first, b.first) > 0; });
  MPoly p;
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().first == t.first)
      p.t_.back().second += t.second;
    else
      p.t_.push_back(std::move(t));
  }
  std::erase_if(p.t_, [](const Term& t) { return sgn(t.second) == 0; });
  return p;
}

Rational MPoly::constant_term() const {
  if (!t_.empty() && t_.back().first.is_one()) return t_.back().second;
  return 0;
}

std::uint32_t MPoly::degree(VarId v) const {
  std::uint32_t d = 0;
  for (auto& t : t_) d = std::max(d, t.first.degree(v));
  return d;
}

std::uint32_t MPoly::total_degree() const {
  std::uint32_t d = 0;
  for (auto& t : t_) d = std::max(d, t.first.total_degree());
  return d;
}

std::uint32_t MPoly::total_degree(const std::function<bool(VarId)>& pred) const {
  std::uint32_t d = 0;
  for (auto& t : t_) {
    std::uint32_t s = 0;
    for (auto& [v, e] : t.first.factors())
      if (pred(v)) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::vector<VarId> MPoly::variables() const {
  std::vector<VarId> vs;
  for (auto& t : t_)
    for (auto& f : t.first.factors()) vs.push_back(f.first);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool MPoly::contains(VarId v) const {
  for (auto& t : t_)
    if (t.first.degree(v)) return true;
  return false;
}

std::vector<MPoly> MPoly::coefficients(VarId v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (auto& t : t_) {
    std::uint32_t e = t.first.degree(v);
    buckets[e].emplace_back(t.first / Monomial::var(v, e), t.second);
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

MPoly MPoly::coefficient(VarId v, std::uint32_t e) const {
  std::vector<Term> ts;
  for (auto& t : t_)
    if (t.first.degree(v) == e) ts.emplace_back(t.first / Monomial::var(v, e), t.second);
  return from_terms(std::move(ts));
}

MPoly MPoly::from_coefficients(VarId v, const std::vector<MPoly>& cs) {
  std::vector<Term> ts;
  for (std::size_t e = 0; e < cs.size(); ++e) {
    Monomial m = Monomial::var(v, static_cast<std::uint32_t>(e));
    for (auto& t : cs[e].t_) ts.emplace_back(t.first * m, t.second);
  }
  return from_terms(std::move(ts));
}

MPoly MPoly::substitute(VarId v, const MPoly& value) const {
  if (!contains(v)) return *this;
  auto cs = coefficients(v);
  MPoly r = cs.back();
  for (std::size_t e = cs.size() - 1; e-- > 0;) r = r * value + cs[e];
  return r;
}

MPoly MPoly::substitute(const std::map<VarId, MPoly>& values) const {
  std::map<std::pair<VarId, std::uint32_t>, MPoly> cache;
  auto power = [&](VarId v, std::uint32_t e) -> const MPoly& {
    auto key = std::make_pair(v, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, values.at(v).pow(e)).first->second;
  };
  MPoly r;
  for (auto& t : t_) {
    std::vector<Monomial::Factor> rest;
    MPoly term;
    bool bound = false;
    for (auto& f : t.first.factors()) {
      if (values.count(f.first)) {
        term = bound ? term * power(f.first, f.second) : power(f.first, f.second);
        bound = true;
      } else {
        rest.push_back(f);
      }
    }
    MPoly base = monomial(Monomial(std::move(rest)), t.second);
    r += bound ? base * term : base;
  }
  return r;
}

MPoly MPoly::map_vars(const std::function<VarId(VarId)>& f) const {
  std::vector<Term> ts;
  ts.reserve(t_.size());
  for (auto& t : t_) {
    std::vector<Monomial::Factor> fs;
    for (auto& [v, e] : t.first.factors()) fs.emplace_back(f(v), e);
    ts.emplace_back(Monomial(std::move(fs)), t.second);
  }
  return from_terms(std::move(ts));
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Rational MPoly::evaluate(const std::map<VarId, Rational>& a) const {
  Rational sum = 0;
  for (auto& t : t_) {
    Rational c = t.second;
    for (auto& [v, e] : t.first.factors()) {
      auto it = a.find(v);
      if (it == a.end()) throw std::invalid_argument("evaluate: no value for " + var_info(v).name);
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      c *= p;
    }
    sum += c;
  }
  return sum;
}

std::vector<MPoly::Term> MPoly::combine(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : storage_compare(a[i].first, b[j].first);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(b[j++]);
      if (sign < 0) r.back().second = -r.back().second;
    } else {
      Rational s = sign > 0 ? Rational(a[i].second + b[j].second) : Rational(a[i].second - b[j].second);
      if (sgn(s) != 0) r.emplace_back(a[i].first, std::move(s));
      ++i, ++j;
    }
  }
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.t_.empty()) return *this;
  t_ = combine(t_, o.t_, 1);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.t_.empty()) return *this;
  t_ = combine(t_, o.t_, -1);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    t_.clear();
    return *this;
  }
  for (auto& t : t_) t.second *= c;
  return *this;
}

MPoly operator-(MPoly a) {
  for (auto& t : a.t_) t.second = -t.second;
  return a;
}

MPoly MPoly::mul_term(const Monomial& m, const Rational& c) const {
  MPoly r;
  if (sgn(c) == 0) return r;
  r.t_.reserve(t_.size());
  for (auto& t : t_) r.t_.emplace_back(t.first * m, t.second * c);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  const MPoly& small = a.size() <= b.size() ? a : b;
  const MPoly& big = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return big.mul_term(small.t_[0].first, small.t_[0].second);
  // Pairwise merging of sorted partial products keeps the work near n*m*log(n).
  std::vector<MPoly> parts;
  parts.reserve(small.size());
  for (auto& t : small.t_) parts.push_back(big.mul_term(t.first, t.second));
  while (parts.size() > 1) {
    std::vector<MPoly> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(std::move(parts[i]) + parts[i + 1]);
    if (parts.size() % 2) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts[0]);
}

}  // namespace dalg
