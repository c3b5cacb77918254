#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flatkit/polynomial.hpp"

namespace flatkit {

/// The variable universe of an n-fold fibred power: base variables y and k
/// disjoint fiber blocks, each a renamed copy of some algebra's fiber
/// coordinates, together with the relation ideal (the sum of the renamed
/// defining ideals).
///
/// Ring layout: block 1 variables, ..., block k variables, then the base.
/// With one block the fiber variables keep their own names; with several,
/// copy j of `x` is named `x<j>` (or `x_<j>` when the name already ends in a
/// digit).
class RingTower {
 public:
  /// A one-block tower with no relations.
  RingTower(std::vector<std::string> base, std::vector<std::string> fiber);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t base_dimension() const noexcept { return base_.size(); }
  std::size_t block_count() const noexcept { return stems_.size(); }
  const std::vector<std::string>& base_names() const noexcept { return base_; }
  /// Original (un-suffixed) fiber names of block k, 1-based.
  const std::vector<std::string>& stems(std::size_t k) const { return stems_.at(k - 1); }

  std::vector<std::size_t> base_indices() const;
  std::vector<std::size_t> block_indices(std::size_t k) const;
  std::vector<std::size_t> fiber_indices() const;

  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  RingTower with_relations(std::vector<Polynomial> relations) const;

  Polynomial var(const std::string& name) const { return Polynomial::variable(ring_, name); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(ring_, c); }

  struct Combined;
  /// Fibre product over the shared base: blocks of `a` then blocks of `b`.
  static Combined combine(const RingTower& a, const RingTower& b);
  /// k-fold fibred power; k = 1 returns a copy of this tower.
  RingTower power(unsigned k) const;

  /// Variable map sending block `from` onto block `to` (same stems) and every
  /// other variable to itself, for block-permutation checks.
  std::vector<std::size_t> block_swap(std::size_t from, std::size_t to) const;

 private:
  RingTower(std::vector<std::string> base, std::vector<std::vector<std::string>> stems);

  std::vector<std::string> base_;
  std::vector<std::vector<std::string>> stems_;
  RingPtr ring_;
  std::vector<Polynomial> relations_;
};

struct RingTower::Combined {
  RingTower tower;
  std::vector<std::size_t> left_map;   // variable map from a's ring
  std::vector<std::size_t> right_map;  // variable map from b's ring
};

}  // namespace flatkit
