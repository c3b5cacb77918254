#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "flatkit/rational.hpp"

namespace flatkit::detail {

using SparseVec = std::map<std::size_t, Rational>;

/// Incremental column echelon form over Q that remembers, for every stored
/// vector, which combination of inserted columns produced it. Inserting a
/// column that is already in the span yields the dependency.
class ColumnEchelon {
 public:
  /// Reduces `column` (tagged `id`) against the stored pivots. Returns the
  /// dependency Σ coeff * column_k = 0 (with coefficient 1 on `id`) if the
  /// column lies in the span; otherwise stores it and returns nothing.
  std::optional<SparseVec> insert(std::size_t id, SparseVec column, const ColumnEchelon* base = nullptr);

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  struct Pivot {
    SparseVec vec;
    SparseVec combination;
  };
  const Pivot* find(std::size_t row) const {
    auto it = pivots_.find(row);
    return it == pivots_.end() ? nullptr : &it->second;
  }
  std::unordered_map<std::size_t, Pivot> pivots_;
};

void axpy(SparseVec& y, const Rational& a, const SparseVec& x);

}  // namespace flatkit::detail
