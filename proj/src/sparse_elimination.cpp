#include "sparse_elimination.hpp"

namespace flatkit::detail {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

std::optional<SparseVec> ColumnEchelon::insert(std::size_t id, SparseVec column,
                                               const ColumnEchelon* base) {
  SparseVec combination{{id, Rational(1)}};
  while (!column.empty()) {
    const auto& [row, value] = *column.begin();
    const Pivot* p = find(row);
    if (!p && base) p = base->find(row);
    if (!p) {
      pivots_.emplace(row, Pivot{std::move(column), std::move(combination)});
      return std::nullopt;
    }
    Rational factor = -value / p->vec.at(row);
    axpy(column, factor, p->vec);
    axpy(combination, factor, p->combination);
  }
  return combination;
}

}  // namespace flatkit::detail
