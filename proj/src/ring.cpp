#include "flatkit/ring.hpp"

#include <stdexcept>

namespace flatkit {

Ring::Ring(std::vector<Variable> variables) : vars_(std::move(variables)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name.empty()) throw std::invalid_argument("empty variable name");
    if (!by_name_.emplace(vars_[i].name, i).second)
      throw std::invalid_argument("duplicate variable name '" + vars_[i].name + "'");
  }
}

std::optional<std::size_t> Ring::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t Ring::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown variable '" + name + "'");
}

std::vector<std::size_t> Ring::indices_in(Block block) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].block == block) out.push_back(i);
  return out;
}

std::vector<std::size_t> Ring::indices_of_kind(BlockKind kind) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].block.kind == kind) out.push_back(i);
  return out;
}

RingPtr with_aux_variable(const RingPtr& ring, const std::string& preferred_name) {
  std::string name = preferred_name;
  for (int k = 1; ring->find(name); ++k) name = preferred_name + "_" + std::to_string(k);
  auto vars = ring->variables();
  vars.push_back({name, Block::aux()});
  return make_ring(std::move(vars));
}

}  // namespace flatkit
