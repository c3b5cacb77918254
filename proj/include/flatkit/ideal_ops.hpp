#pragma once

#include <cstddef>
#include <vector>

#include "flatkit/groebner.hpp"

namespace flatkit {

/// Intersection of N with the free module over the variables not in `kill`.
/// Returned generators are the kill-free elements of a reduced basis under an
/// elimination order, so they form a Groebner basis of the result.
Submodule eliminate(const Submodule& n, const std::vector<std::size_t>& kill,
                    const Engine& engine = Engine{});
Submodule eliminate(const Submodule& n, const std::vector<Block>& kill_blocks,
                    const Engine& engine = Engine{});

/// N1 ∩ N2 by eliminating t from t*N1 + (1-t)*N2.
Submodule intersect(const Submodule& n1, const Submodule& n2, const Engine& engine = Engine{});

/// The ideal (N : m) = { s : s*m ∈ N }, via syzygies of (m, 1) against (N, 0).
Submodule colon(const Submodule& n, const FreeModuleVector& m, const Engine& engine = Engine{});

/// The submodule (N : h) = { v : h*v ∈ N }.
Submodule module_colon(const Submodule& n, const Polynomial& h, const Engine& engine = Engine{});

/// (N : h^∞) by adjoining t, adding (1 - t*h)*e_i and eliminating t.
/// Requires h != 0. Result is the reduced default-order basis.
Submodule saturate(const Submodule& n, const Polynomial& h, const Engine& engine = Engine{});

/// (N : h^∞) as the stable value of N, N:h, (N:h):h, ...; independent of the
/// t-trick and used to cross-check it.
Submodule saturate_by_colon(const Submodule& n, const Polynomial& h,
                            const Engine& engine = Engine{});

/// Dimension of V(I) inside the affine space on `vars`; I must only involve
/// those variables. The unit ideal has an empty variety.
struct KrullDimension {
  enum class Kind { Empty, Finite };
  Kind kind = Kind::Empty;
  int value = -1;

  static KrullDimension empty() { return {}; }
  static KrullDimension of(int d) { return {Kind::Finite, d}; }
  bool is_empty() const noexcept { return kind == Kind::Empty; }
  /// -1 for the empty variety.
  int as_int() const noexcept { return is_empty() ? -1 : value; }

  friend bool operator==(const KrullDimension&, const KrullDimension&) = default;
};

KrullDimension krull_dimension(const Submodule& ideal, const std::vector<std::size_t>& vars,
                               const Engine& engine = Engine{});
/// Over every variable of the ring.
KrullDimension krull_dimension(const Submodule& ideal, const Engine& engine = Engine{});

/// Largest set of variables (from `vars`) that contains the support of none
/// of `leads`. Exposed for testing.
std::vector<std::size_t> maximal_independent_set(const std::vector<Monomial>& leads,
                                                 const std::vector<std::size_t>& vars);

}  // namespace flatkit
