#pragma once

#include <unordered_map>
#include <vector>

#include "dalg/mpoly.hpp"

namespace dalg {

// Block monomial order. Blocks compare left to right; inside a block the
// variables are listed highest-ranked first.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex };
  struct Block {
    Kind kind;
    std::vector<VarId> vars;
  };

  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<Block> blocks);
  static MonomialOrder lex(std::vector<VarId> ranked);
  static MonomialOrder grevlex(std::vector<VarId> ranked);
  // Eliminated variables in a grevlex block above a lex block of kept ones.
  static MonomialOrder elimination(std::vector<VarId> eliminate, std::vector<VarId> keep);
  // Pure lex with all z-variables above all w-variables and higher shifts
  // first inside each group.
  static MonomialOrder output_over_states(std::vector<VarId> z, std::vector<VarId> w);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::vector<VarId> variables() const;
  bool covers(VarId v) const { return pos_.count(v) != 0; }
  // Fails hard on a variable the order does not cover.
  int compare(const Monomial& a, const Monomial& b) const;
  // Every monomial containing one of elim is above every monomial free of them.
  bool eliminates(const std::vector<VarId>& elim) const;
  MonomialOrder with_leading_block(Block b) const;

 private:
  std::vector<Block> blocks_;
  std::unordered_map<VarId, std::pair<int, int>> pos_;
};

}  // namespace dalg
