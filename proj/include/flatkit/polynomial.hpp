#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flatkit/monomial.hpp"
#include "flatkit/order.hpp"
#include "flatkit/rational.hpp"
#include "flatkit/ring.hpp"

namespace flatkit {

/// Sparse polynomial with exact rational coefficients. Terms are kept in a map
/// keyed by monomial, with no zero coefficients, so equal values compare equal
/// regardless of how they were built.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, TermMap terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  long total_degree() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  bool involves(std::size_t var) const;
  bool involves_any(const std::vector<std::size_t>& vars) const;
  /// True if every variable occurring is in `vars`.
  bool only_in(const std::vector<std::size_t>& vars) const;

  /// Leading (monomial, coefficient) under `order`; requires nonzero.
  std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;
  /// Divides by the leading coefficient under `order`; zero stays zero.
  Polynomial monic(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned k) const;

  /// Same terms, moved into another universe; `var_map[i]` is the target
  /// index of this ring's variable i.
  Polynomial map_to(const RingPtr& target, const std::vector<std::size_t>& var_map) const;

  /// Canonical text: terms in descending grevlex order of the ring's
  /// variable sequence, e.g. "-3/2*x^2*y1 + x - 1". Re-parses to an equal value.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  TermMap terms_;
};

/// Partial substitution of rational values; variables absent from the
/// assignment stay symbolic. A ring homomorphism.
Polynomial evaluate(const Polynomial& p, const std::map<std::size_t, Rational>& assignment);

/// Substitutes polynomials for variables (same ring). Unlisted variables stay.
Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& images);

}  // namespace flatkit
