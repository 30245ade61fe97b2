#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dalg {

using VarId = std::uint32_t;

// Param < Index < Seq < Aux in the canonical ranking.
enum class VarKind : std::uint8_t { Param, Index, Seq, Aux };

struct VarInfo {
  VarKind kind;
  std::string seq;  // sequence name (Seq) or symbol name (others)
  int shift = 0;
  std::string name;
};

VarId param_var(std::string_view name);
VarId index_var();
VarId seq_var(std::string_view seq, int shift);
VarId aux_var(std::string_view name);

const VarInfo& var_info(VarId v);
inline bool is_seq(VarId v) { return var_info(v).kind == VarKind::Seq; }
inline bool is_param(VarId v) { return var_info(v).kind == VarKind::Param; }

// Sequence variable with the same name and shift moved by k.
VarId shifted(VarId v, int k);

// Canonical variable ranking: negative, zero or positive like strcmp.
// Higher shifts rank higher, parameters rank lowest, and among equal
// kinds and shifts the alphabetically earlier name ranks higher.
int compare_rank(VarId a, VarId b);
inline bool rank_less(VarId a, VarId b) { return compare_rank(a, b) < 0; }

}  // namespace dalg
