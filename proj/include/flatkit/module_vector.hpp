#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flatkit/polynomial.hpp"

namespace flatkit {

/// Element of a free module S^rank, one polynomial per component.
class FreeModuleVector {
 public:
  FreeModuleVector(RingPtr ring, std::size_t rank);
  explicit FreeModuleVector(std::vector<Polynomial> entries);
  /// Rank-one vector wrapping a polynomial.
  explicit FreeModuleVector(Polynomial p);

  static FreeModuleVector unit(RingPtr ring, std::size_t rank, std::size_t i);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return entries_.size(); }
  const Polynomial& operator[](std::size_t i) const { return entries_.at(i); }
  Polynomial& operator[](std::size_t i) { return entries_.at(i); }
  const std::vector<Polynomial>& entries() const noexcept { return entries_; }

  bool is_zero() const;
  long total_degree() const;
  bool involves_any(const std::vector<std::size_t>& vars) const;

  FreeModuleVector& operator+=(const FreeModuleVector& other);
  FreeModuleVector& operator-=(const FreeModuleVector& other);
  FreeModuleVector operator-() const;
  friend FreeModuleVector operator+(FreeModuleVector a, const FreeModuleVector& b) {
    return a += b;
  }
  friend FreeModuleVector operator-(FreeModuleVector a, const FreeModuleVector& b) {
    return a -= b;
  }
  friend FreeModuleVector operator*(const Polynomial& s, const FreeModuleVector& v);

  FreeModuleVector map_to(const RingPtr& target, const std::vector<std::size_t>& var_map) const;

  /// "[p0, p1, ...]" using canonical polynomial text.
  std::string to_string() const;

  friend bool operator==(const FreeModuleVector& a, const FreeModuleVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> entries_;
};

/// A submodule of S^rank given by generators (rank 1: an ideal).
struct Submodule {
  RingPtr ring;
  std::size_t rank = 1;
  std::vector<FreeModuleVector> generators;

  Submodule(RingPtr r, std::size_t rk, std::vector<FreeModuleVector> gens = {});

  bool is_zero() const;
  /// Entries of a rank-1 submodule.
  std::vector<Polynomial> polynomials() const;
  std::vector<std::string> to_strings() const;
};

Submodule make_ideal(RingPtr ring, const std::vector<Polynomial>& gens);

}  // namespace flatkit
