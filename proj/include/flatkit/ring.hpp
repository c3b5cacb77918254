#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace flatkit {

enum class BlockKind { Base, Fiber, Aux };

/// Which block a variable belongs to. Fiber blocks are numbered from 1.
struct Block {
  BlockKind kind = BlockKind::Base;
  unsigned index = 0;

  static constexpr Block base() { return {BlockKind::Base, 0}; }
  static constexpr Block fiber(unsigned k) { return {BlockKind::Fiber, k}; }
  static constexpr Block aux() { return {BlockKind::Aux, 0}; }

  friend bool operator==(const Block&, const Block&) = default;
};

struct Variable {
  std::string name;
  Block block;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// An immutable variable universe. Polynomials hold a shared pointer to the
/// ring they live in; variable indices are positions in `variables()`.
class Ring {
 public:
  explicit Ring(std::vector<Variable> variables);

  std::size_t size() const noexcept { return vars_.size(); }
  const std::vector<Variable>& variables() const noexcept { return vars_; }
  const Variable& variable(std::size_t i) const { return vars_.at(i); }
  const std::string& name(std::size_t i) const { return vars_.at(i).name; }

  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;  // throws if missing

  /// Indices of all variables in the given block, in ring order.
  std::vector<std::size_t> indices_in(Block block) const;
  std::vector<std::size_t> indices_of_kind(BlockKind kind) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<Variable> variables) {
  return std::make_shared<const Ring>(std::move(variables));
}

/// Same universe: pointer-equal or structurally equal.
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Ring with one extra auxiliary variable appended (used by the t-trick).
RingPtr with_aux_variable(const RingPtr& ring, const std::string& preferred_name = "t");

}  // namespace flatkit
