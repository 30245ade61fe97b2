#include "dalg/order.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dalg {

MonomialOrder::MonomialOrder(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  for (int b = 0; b < static_cast<int>(blocks_.size()); ++b)
    for (int i = 0; i < static_cast<int>(blocks_[b].vars.size()); ++i)
      if (!pos_.emplace(blocks_[b].vars[i], std::make_pair(b, i)).second)
        throw std::invalid_argument("monomial order lists a variable twice");
}

MonomialOrder MonomialOrder::lex(std::vector<VarId> ranked) {
  return MonomialOrder({Block{Kind::Lex, std::move(ranked)}});
}

MonomialOrder MonomialOrder::grevlex(std::vector<VarId> ranked) {
  return MonomialOrder({Block{Kind::GrevLex, std::move(ranked)}});
}

MonomialOrder MonomialOrder::elimination(std::vector<VarId> eliminate, std::vector<VarId> keep) {
  std::vector<Block> bs;
  if (!eliminate.empty()) bs.push_back({Kind::GrevLex, std::move(eliminate)});
  if (!keep.empty()) bs.push_back({Kind::Lex, std::move(keep)});
  return MonomialOrder(std::move(bs));
}

MonomialOrder MonomialOrder::output_over_states(std::vector<VarId> z, std::vector<VarId> w) {
  auto by_shift = [](VarId a, VarId b) {
    auto& x = var_info(a);
    auto& y = var_info(b);
    if (x.shift != y.shift) return x.shift > y.shift;
    return x.seq < y.seq;
  };
  std::sort(z.begin(), z.end(), by_shift);
  std::sort(w.begin(), w.end(), by_shift);
  z.insert(z.end(), w.begin(), w.end());
  return lex(std::move(z));
}

std::vector<VarId> MonomialOrder::variables() const {
  std::vector<VarId> vs;
  for (auto& b : blocks_) vs.insert(vs.end(), b.vars.begin(), b.vars.end());
  return vs;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  std::vector<std::vector<long>> ea(blocks_.size()), eb(blocks_.size());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    ea[i].assign(blocks_[i].vars.size(), 0);
    eb[i].assign(blocks_[i].vars.size(), 0);
  }
  auto fill = [&](const Monomial& m, std::vector<std::vector<long>>& e) {
    for (auto& [v, x] : m.factors()) {
      auto it = pos_.find(v);
      if (it == pos_.end()) throw std::invalid_argument("monomial order does not cover " + var_info(v).name);
      e[it->second.first][it->second.second] = x;
    }
  };
  fill(a, ea);
  fill(b, eb);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    auto& x = ea[i];
    auto& y = eb[i];
    if (blocks_[i].kind == Kind::Lex) {
      for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] != y[k]) return x[k] > y[k] ? 1 : -1;
    } else {
      long dx = 0, dy = 0;
      for (std::size_t k = 0; k < x.size(); ++k) dx += x[k], dy += y[k];
      if (dx != dy) return dx > dy ? 1 : -1;
      for (std::size_t k = x.size(); k-- > 0;)
        if (x[k] != y[k]) return x[k] < y[k] ? 1 : -1;
    }
  }
  return 0;
}

bool MonomialOrder::eliminates(const std::vector<VarId>& elim) const {
  std::set<VarId> e(elim.begin(), elim.end());
  for (VarId v : elim)
    if (!covers(v)) return false;
  bool seen_kept = false;
  for (auto& b : blocks_) {
    bool has_e = false, has_k = false;
    for (VarId v : b.vars) (e.count(v) ? has_e : has_k) = true;
    if (has_e && seen_kept) return false;
    if (has_e && has_k) {
      // A mixed block works only for lex with the eliminated variables first.
      if (b.kind != Kind::Lex) return false;
      bool kept_started = false;
      for (VarId v : b.vars) {
        if (!e.count(v))
          kept_started = true;
        else if (kept_started)
          return false;
      }
    }
    if (has_k) seen_kept = true;
  }
  return true;
}

MonomialOrder MonomialOrder::with_leading_block(Block b) const {
  std::vector<Block> bs{std::move(b)};
  bs.insert(bs.end(), blocks_.begin(), blocks_.end());
  return MonomialOrder(std::move(bs));
}

}  // namespace dalg
