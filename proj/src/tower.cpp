#include "flatkit/tower.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace flatkit {

namespace {

std::vector<Variable> layout(const std::vector<std::string>& base,
                             const std::vector<std::vector<std::string>>& stems, int scheme) {
  const std::size_t k = stems.size();
  std::vector<Variable> vars;
  for (std::size_t b = 0; b < k; ++b)
    for (const auto& stem : stems[b]) {
      std::string name = stem;
      if (k > 1) {
        bool digit_end = !stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()));
        name += (scheme == 1 || digit_end ? "_" : "") + std::to_string(b + 1);
      }
      vars.push_back({name, Block::fiber(static_cast<unsigned>(b + 1))});
    }
  for (const auto& y : base) vars.push_back({y, Block::base()});
  return vars;
}

bool unique_names(const std::vector<Variable>& vars) {
  std::set<std::string> seen;
  for (const auto& v : vars)
    if (!seen.insert(v.name).second) return false;
  return true;
}

}  // namespace

RingTower::RingTower(std::vector<std::string> base, std::vector<std::string> fiber)
    : RingTower(std::move(base), std::vector<std::vector<std::string>>{std::move(fiber)}) {}

RingTower::RingTower(std::vector<std::string> base, std::vector<std::vector<std::string>> stems)
    : base_(std::move(base)), stems_(std::move(stems)) {
  if (stems_.empty()) throw std::invalid_argument("a tower needs at least one fiber block");
  auto vars = layout(base_, stems_, 0);
  if (!unique_names(vars)) vars = layout(base_, stems_, 1);
  if (!unique_names(vars)) throw std::invalid_argument("variable names collide in the tower");
  ring_ = make_ring(std::move(vars));
}

std::vector<std::size_t> RingTower::base_indices() const { return ring_->indices_in(Block::base()); }

std::vector<std::size_t> RingTower::block_indices(std::size_t k) const {
  if (k == 0 || k > stems_.size()) throw std::out_of_range("fiber block index");
  return ring_->indices_in(Block::fiber(static_cast<unsigned>(k)));
}

std::vector<std::size_t> RingTower::fiber_indices() const {
  return ring_->indices_of_kind(BlockKind::Fiber);
}

RingTower RingTower::with_relations(std::vector<Polynomial> relations) const {
  for (const auto& r : relations)
    if (!same_ring(r.ring(), ring_)) throw std::invalid_argument("relation lives in another ring");
  RingTower t(*this);
  t.relations_ = std::move(relations);
  return t;
}

RingTower::Combined RingTower::combine(const RingTower& a, const RingTower& b) {
  if (a.base_ != b.base_) throw std::invalid_argument("tensor factors must share the base variables");
  auto stems = a.stems_;
  stems.insert(stems.end(), b.stems_.begin(), b.stems_.end());
  RingTower t(a.base_, std::move(stems));

  auto build_map = [&t](const RingTower& src, std::size_t block_offset) {
    std::vector<std::size_t> map(src.ring_->size());
    auto tbase = t.base_indices();
    auto sbase = src.base_indices();
    for (std::size_t i = 0; i < sbase.size(); ++i) map[sbase[i]] = tbase[i];
    for (std::size_t k = 1; k <= src.block_count(); ++k) {
      auto from = src.block_indices(k);
      auto to = t.block_indices(k + block_offset);
      for (std::size_t i = 0; i < from.size(); ++i) map[from[i]] = to[i];
    }
    return map;
  };
  auto left = build_map(a, 0);
  auto right = build_map(b, a.block_count());
  std::vector<Polynomial> rels;
  for (const auto& r : a.relations_) rels.push_back(r.map_to(t.ring_, left));
  for (const auto& r : b.relations_) rels.push_back(r.map_to(t.ring_, right));
  t.relations_ = std::move(rels);
  return {std::move(t), std::move(left), std::move(right)};
}

RingTower RingTower::power(unsigned k) const {
  if (k == 0) throw std::invalid_argument("tensor power needs k >= 1");
  RingTower result = *this;
  for (unsigned j = 2; j <= k; ++j) result = combine(result, *this).tower;
  return result;
}

std::vector<std::size_t> RingTower::block_swap(std::size_t from, std::size_t to) const {
  auto a = block_indices(from);
  auto b = block_indices(to);
  if (a.size() != b.size()) throw std::invalid_argument("blocks have different widths");
  std::vector<std::size_t> map(ring_->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  for (std::size_t i = 0; i < a.size(); ++i) {
    map[a[i]] = b[i];
    map[b[i]] = a[i];
  }
  return map;
}

}  // namespace flatkit
