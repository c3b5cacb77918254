#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "flatkit/monomial.hpp"

namespace flatkit {

enum class InnerOrder { Lex, Grevlex };

/// A block (product) monomial order, extended to free modules by inserting a
/// position comparison between two blocks. Plain lex and grevlex are the
/// one-block cases. Lower component index means higher priority.
///
/// Blocks are compared in sequence: the first block whose restricted
/// monomials differ decides. With `position_slot == 0` the order is
/// position-over-term; with `position_slot == blocks.size()` it is
/// term-over-position.
class MonomialOrder {
 public:
  struct VarBlock {
    std::vector<std::size_t> vars;
    InnerOrder inner = InnerOrder::Grevlex;
  };

  /// Throws std::invalid_argument unless the blocks partition 0..nvars-1.
  MonomialOrder(std::size_t nvars, std::vector<VarBlock> blocks, std::size_t position_slot = 0);

  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);
  /// Variables in `first` strictly dominate the rest (each block grevlex
  /// inside); position compared right after `first`. An elimination order
  /// for `first`, on ideals and on modules.
  static MonomialOrder elimination(std::size_t nvars, std::vector<std::size_t> first);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<VarBlock>& blocks() const noexcept { return blocks_; }
  std::size_t position_slot() const noexcept { return position_slot_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  std::strong_ordering compare(std::size_t comp_a, const Monomial& a, std::size_t comp_b,
                               const Monomial& b) const;

  std::string describe() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

 private:
  std::strong_ordering compare_block(const VarBlock& blk, const Monomial& a,
                                     const Monomial& b) const;

  std::size_t nvars_;
  std::vector<VarBlock> blocks_;
  std::size_t position_slot_;
};

}  // namespace flatkit
