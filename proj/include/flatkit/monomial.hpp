#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace flatkit {

using Exponent = std::uint32_t;

/// Dense exponent vector over a fixed variable universe. Ordering via `<=>`
/// is the canonical storage order only; monomial orders live in MonomialOrder.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Sum of exponents over the given variable indices.
  std::uint64_t degree_in(std::span<const std::size_t> vars) const;
  bool involves_any(std::span<const std::size_t> vars) const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  /// Exact quotient; requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;

  /// Drops every variable in `vars`, keeping the universe size.
  Monomial without(std::span<const std::size_t> vars) const;
  /// Keeps only variables in `vars`.
  Monomial restricted_to(std::span<const std::size_t> vars) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

/// All monomials in `vars` (ring of size nvars) of total degree <= max_degree,
/// ordered by degree and then canonically.
std::vector<Monomial> monomials_up_to(std::size_t nvars, std::span<const std::size_t> vars,
                                      unsigned max_degree);

}  // namespace flatkit

template <>
struct std::hash<flatkit::Monomial> {
  std::size_t operator()(const flatkit::Monomial& m) const noexcept { return m.hash(); }
};
