#include "dalg/holonomic.hpp"

#include <algorithm>
#include <stdexcept>

#include "dalg/errors.hpp"
#include "dalg/polyalg.hpp"
#include "dalg/seqeval.hpp"

namespace dalg {

ClosureResult make_result(DiffPoly p, std::string seq, int bound, std::vector<MPoly> side) {
  ClosureResult r;
  auto od = order_degree(p);
  r.polynomial = std::move(p);
  r.seq = std::move(seq);
  r.order = od.order;
  r.degree = od.degree;
  r.bound = bound;
  r.side_conditions = std::move(side);
  return r;
}

unsigned HoloEq::degree() const {
  unsigned d = 0;
  for (auto& c : coeffs) d = std::max(d, c.degree(index_var()));
  return d;
}

DiffPoly HoloEq::to_diffpoly() const {
  MPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p += coeffs[i] * MPoly::var(seq_var(seq, static_cast<int>(i)));
  return p;
}

HoloEq HoloEq::from_diffpoly(const DiffPoly& p) {
  auto seqs = p.sequences();
  if (seqs.size() != 1) throw std::invalid_argument("holonomic equation must involve exactly one sequence");
  HoloEq h;
  h.seq = seqs[0];
  int l = dalg::order(p);
  h.coeffs.assign(l + 1, MPoly());
  for (auto& [m, c] : p.body().terms()) {
    int shift = -1;
    std::vector<Monomial::Factor> rest;
    for (auto& [v, e] : m.factors()) {
      if (is_seq(v)) {
        if (shift >= 0 || e != 1) throw std::invalid_argument("holonomic equation is not linear in the sequence terms");
        shift = var_info(v).shift;
      } else {
        rest.push_back({v, e});
      }
    }
    if (shift < 0) throw std::invalid_argument("holonomic equation is not homogeneous");
    h.coeffs[shift] += MPoly::monomial(Monomial(std::move(rest)), c);
  }
  if (h.coeffs.back().is_zero()) throw std::invalid_argument("leading holonomic coefficient vanishes");
  return h;
}

MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m) {
  std::size_t n = m.size();
  if (n == 0) return MPoly(1);
  int sign = 1;
  MPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return MPoly();
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = MPoly();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

ClosureResult holo_to_ratrec(const HoloEq& h) {
  int l = h.order();
  if (l < 0) throw std::invalid_argument("empty holonomic equation");
  int d = static_cast<int>(h.degree());
  DiffPoly p = h.to_diffpoly();
  if (d == 0) {
    DiffPoly q = normalize(p);
    return make_result(q, h.seq, l, {initial(q).body()});
  }
  VarId n = index_var();
  // gamma[j][k]: coefficient of n^k in the j-th shift of p.
  std::vector<std::vector<MPoly>> gamma(d + 1);
  for (int j = 0; j <= d; ++j) {
    MPoly q = shift(p.body(), j);
    for (int k = 0; k <= d; ++k) gamma[j].push_back(q.coefficient(n, k));
  }
  std::vector<std::vector<MPoly>> mg(d, std::vector<MPoly>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 1; k <= d; ++k) mg[j][k - 1] = gamma[j][k];
  MPoly det = bareiss_determinant(mg);
  if (det.is_zero())
    throw DegenerateError("holonomic conversion: the linear system for the powers of n is singular");
  // Cramer: n^k = det_k / det.
  MPoly rel = gamma[d][0] * det;
  for (int k = 1; k <= d; ++k) {
    auto mk = mg;
    for (int j = 0; j < d; ++j) mk[j][k - 1] = -gamma[j][0];
    rel += gamma[d][k] * bareiss_determinant(std::move(mk));
  }
  VarId top = seq_var(h.seq, l + d);
  if (rel.degree(top) != 1)
    throw DegenerateError("holonomic conversion: the top shift cancels from the relation");
  rel = primitive_in(rel, top);
  DiffPoly q = normalize(rel);
  return make_result(q, h.seq, l + d, {det, initial(q).body()});
}

std::optional<long> max_nonneg_integer_root(const MPoly& p) {
  if (p.is_zero() || p.is_constant()) return std::nullopt;
  std::optional<long> best;
  for (auto& r : rational_roots(p))
    if (r.get_den() == 1 && r >= 0 && r.get_num().fits_slong_p()) best = std::max(best.value_or(-1), r.get_num().get_si());
  return best;
}

}  // namespace dalg
