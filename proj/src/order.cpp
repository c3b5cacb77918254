#include "flatkit/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flatkit {

MonomialOrder::MonomialOrder(std::size_t nvars, std::vector<VarBlock> blocks,
                             std::size_t position_slot)
    : nvars_(nvars), blocks_(std::move(blocks)), position_slot_(position_slot) {
  std::vector<int> seen(nvars, 0);
  for (const auto& b : blocks_)
    for (std::size_t v : b.vars) {
      if (v >= nvars || seen[v]++) throw std::invalid_argument("order blocks must partition the variables");
    }
  for (int s : seen)
    if (s != 1) throw std::invalid_argument("order blocks must partition the variables");
  if (position_slot_ > blocks_.size()) throw std::invalid_argument("position slot out of range");
  // Empty blocks never decide anything; drop them but keep the slot meaningful.
  std::vector<VarBlock> kept;
  std::size_t slot = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i == position_slot_) slot = kept.size();
    if (!blocks_[i].vars.empty()) kept.push_back(std::move(blocks_[i]));
  }
  if (position_slot_ == blocks_.size()) slot = kept.size();
  blocks_ = std::move(kept);
  position_slot_ = slot;
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<std::size_t> all(nvars);
  std::iota(all.begin(), all.end(), 0);
  return MonomialOrder(nvars, {{std::move(all), InnerOrder::Grevlex}}, 0);
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> all(nvars);
  std::iota(all.begin(), all.end(), 0);
  return MonomialOrder(nvars, {{std::move(all), InnerOrder::Lex}}, 0);
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, std::vector<std::size_t> first) {
  std::vector<int> in_first(nvars, 0);
  for (std::size_t v : first) in_first.at(v) = 1;
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < nvars; ++v)
    if (!in_first[v]) rest.push_back(v);
  std::sort(first.begin(), first.end());
  return MonomialOrder(nvars,
                       {{std::move(first), InnerOrder::Grevlex}, {std::move(rest), InnerOrder::Grevlex}},
                       1);
}

std::strong_ordering MonomialOrder::compare_block(const VarBlock& blk, const Monomial& a,
                                                  const Monomial& b) const {
  if (blk.inner == InnerOrder::Lex) {
    for (std::size_t v : blk.vars)
      if (a[v] != b[v]) return a[v] <=> b[v];
    return std::strong_ordering::equal;
  }
  std::uint64_t da = 0, db = 0;
  if (blk.vars.size() == nvars_) {
    da = a.degree();
    db = b.degree();
  } else {
    da = a.degree_in(blk.vars);
    db = b.degree_in(blk.vars);
  }
  if (da != db) return da <=> db;
  for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it)
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& blk : blocks_)
    if (auto c = compare_block(blk, a, b); c != 0) return c;
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(std::size_t comp_a, const Monomial& a,
                                            std::size_t comp_b, const Monomial& b) const {
  for (std::size_t i = 0; i <= blocks_.size(); ++i) {
    if (i == position_slot_ && comp_a != comp_b) return comp_b <=> comp_a;
    if (i == blocks_.size()) break;
    if (auto c = compare_block(blocks_[i], a, b); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i <= blocks_.size(); ++i) {
    if (i == position_slot_) os << (i ? " > " : "") << "position";
    if (i == blocks_.size()) break;
    if (i || position_slot_ == 0) os << " > ";
    os << (blocks_[i].inner == InnerOrder::Lex ? "lex{" : "grevlex{");
    for (std::size_t k = 0; k < blocks_[i].vars.size(); ++k)
      os << (k ? "," : "") << blocks_[i].vars[k];
    os << "}";
  }
  return os.str();
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  if (a.nvars_ != b.nvars_ || a.position_slot_ != b.position_slot_ ||
      a.blocks_.size() != b.blocks_.size())
    return false;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i)
    if (a.blocks_[i].vars != b.blocks_[i].vars || a.blocks_[i].inner != b.blocks_[i].inner)
      return false;
  return true;
}

}  // namespace flatkit
