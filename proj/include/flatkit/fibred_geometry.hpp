#pragma once

#include <string>
#include <vector>

#include "flatkit/ideal_ops.hpp"
#include "flatkit/tower.hpp"

namespace flatkit {

/// Dimension of the fibre of Spec A -> Spec R over a rational point of the
/// base: the Krull dimension of I(y := point) in Q[x]; -1 for an empty fibre.
int fibre_dimension_at(const RingTower& algebra, const std::vector<Rational>& point,
                       const Engine& engine = Engine{});

/// Closure of the image in the base: the fiber variables eliminated from the
/// tower's relations (or from `gens`).
Submodule image_closure(const RingTower& tower, const Engine& engine = Engine{});
Submodule image_closure(const RingTower& tower, const std::vector<Polynomial>& gens,
                        const Engine& engine = Engine{});

/// dim V(I) - dim of the image closure. Exact for irreducible I; for a
/// reducible I it describes the components of top dimension only.
int generic_fibre_dimension(const RingTower& algebra, const Engine& engine = Engine{});

struct FibreReport {
  std::vector<Rational> point;
  int fibre_dimension_at_point = -1;
  int generic_fibre_dimension = -1;
  int source_dimension = -1;
  Submodule image_closure;
  bool dominant = false;
};

FibreReport fibre_report(const RingTower& algebra, const std::vector<Rational>& point,
                         const Engine& engine = Engine{});

/// A candidate component of a fibred power, supplied by the caller.
struct ComponentIdeal {
  std::string label;
  std::vector<Polynomial> generators;

  /// Generators plus the tower's relations, so the invariant holds by
  /// construction.
  static ComponentIdeal over(const RingTower& tower, std::string label,
                             std::vector<Polynomial> generators);
};

struct Verticality {
  bool vertical = false;
  /// The component is empty (its ideal is the unit ideal).
  bool empty_component = false;
  Submodule image;
};

/// Vertical iff the image closure of V(Q) in the base is a proper subvariety.
/// Throws std::invalid_argument if Q does not contain the tower's relations.
Verticality is_algebraically_vertical(const RingTower& tower, const ComponentIdeal& component,
                                      const Engine& engine = Engine{});

/// Labels of the supplied components that are algebraically vertical.
std::vector<std::string> openness_witness(const RingTower& tower,
                                          const std::vector<ComponentIdeal>& components,
                                          const Engine& engine = Engine{});

}  // namespace flatkit
