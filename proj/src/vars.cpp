#include "dalg/vars.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace dalg {
namespace {

struct Registry {
  std::shared_mutex mu;
  std::deque<VarInfo> infos;
  std::unordered_map<std::string, VarId> by_key;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::string make_key(VarKind k, std::string_view seq, int shift) {
  std::string key(1, static_cast<char>('0' + static_cast<int>(k)));
  key += seq;
  key += '#';
  key += std::to_string(shift);
  return key;
}

VarId intern(VarKind kind, std::string_view seq, int shift) {
  auto& r = registry();
  std::string key = make_key(kind, seq, shift);
  {
    std::shared_lock lock(r.mu);
    auto it = r.by_key.find(key);
    if (it != r.by_key.end()) return it->second;
  }
  std::unique_lock lock(r.mu);
  auto it = r.by_key.find(key);
  if (it != r.by_key.end()) return it->second;
  VarInfo info{kind, std::string(seq), shift, {}};
  if (kind == VarKind::Seq)
    info.name = shift == 0 ? info.seq + "(n)" : info.seq + "(n+" + std::to_string(shift) + ")";
  else
    info.name = info.seq;
  VarId id = static_cast<VarId>(r.infos.size());
  r.infos.push_back(std::move(info));
  r.by_key.emplace(std::move(key), id);
  return id;
}

}  // namespace

VarId param_var(std::string_view name) { return intern(VarKind::Param, name, 0); }
VarId index_var() { return intern(VarKind::Index, "n", 0); }
VarId aux_var(std::string_view name) { return intern(VarKind::Aux, name, 0); }

VarId seq_var(std::string_view seq, int shift) {
  if (shift < 0) throw std::invalid_argument("negative shift for sequence " + std::string(seq));
  return intern(VarKind::Seq, seq, shift);
}

const VarInfo& var_info(VarId v) {
  auto& r = registry();
  std::shared_lock lock(r.mu);
  if (v >= r.infos.size()) throw std::out_of_range("unknown variable id");
  return r.infos[v];
}

VarId shifted(VarId v, int k) {
  const VarInfo& info = var_info(v);
  if (info.kind != VarKind::Seq) throw std::invalid_argument("shifted: not a sequence variable");
  return seq_var(info.seq, info.shift + k);
}

int compare_rank(VarId a, VarId b) {
  if (a == b) return 0;
  const VarInfo& x = var_info(a);
  const VarInfo& y = var_info(b);
  if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind) ? -1 : 1;
  if (x.kind == VarKind::Seq && x.shift != y.shift) return x.shift < y.shift ? -1 : 1;
  // Alphabetically earlier names rank higher, so x1 > x2 as usual.
  int c = x.seq.compare(y.seq);
  return c < 0 ? 1 : (c > 0 ? -1 : 0);
}

}  // namespace dalg
