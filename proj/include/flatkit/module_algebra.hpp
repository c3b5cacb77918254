#pragma once

#include <cstddef>
#include <vector>

#include "flatkit/groebner.hpp"
#include "flatkit/tower.hpp"

namespace flatkit {

/// M = S^rank / N over the full polynomial ring S of a tower. The tower's
/// relations times every basis vector are always part of N, so M is a module
/// over the quotient algebra without any quotient-ring arithmetic.
class ModulePresentation {
 public:
  ModulePresentation(RingTower tower, std::size_t rank, std::vector<FreeModuleVector> relations);

  /// F = A: rank one, relations = the defining ideal.
  static ModulePresentation algebra(const RingTower& tower);
  static ModulePresentation free(const RingTower& tower, std::size_t rank);

  const RingTower& tower() const noexcept { return tower_; }
  const RingPtr& ring() const noexcept { return tower_.ring(); }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<FreeModuleVector>& relations() const noexcept { return relations_; }
  Submodule submodule() const { return {tower_.ring(), rank_, relations_}; }

 private:
  RingTower tower_;
  std::size_t rank_;
  std::vector<FreeModuleVector> relations_;
};

/// Presentation of M1 ⊗_R M2 over the combined tower: rank b1*b2 with basis
/// e_i ⊗ f_j at index i*b2 + j, relations (rel ⊗ f_j) and (e_i ⊗ rel).
ModulePresentation tensor_presentation(const ModulePresentation& m1, const ModulePresentation& m2);
ModulePresentation tensor_power(const ModulePresentation& m, unsigned k);

/// R-torsion of M as (N : h^∞)/N, where h is the product of the distinct
/// non-constant base-variable lead coefficients of a basis of N under an
/// order with every fiber variable above the base.
struct TorsionSubmodule {
  /// Normal forms (mod N) of generators of the torsion; empty iff torsion-free.
  std::vector<FreeModuleVector> generators;
  Polynomial clearing;
  std::vector<Polynomial> clearing_factors;
  /// Reduced default-order basis of N : h^∞.
  Submodule saturation;
};

TorsionSubmodule torsion_submodule(const ModulePresentation& m, const Engine& engine = Engine{});

bool is_torsion_free(const ModulePresentation& m, const Engine& engine = Engine{});

/// True iff N = S^rank.
bool is_zero_module(const ModulePresentation& m, const Engine& engine = Engine{});

/// (N : m) ∩ Q[y], as a reduced basis; (1) when m ∈ N.
Submodule annihilator_in_base(const ModulePresentation& m, const FreeModuleVector& element,
                              const Engine& engine = Engine{});

/// A non-flatness witness: `annihilator * element ∈ N` while `element ∉ N`.
struct TorsionCertificate {
  FreeModuleVector element;
  Polynomial annihilator;
  bool product_in_relations = false;
  bool element_outside_relations = false;
};

/// Picks the lowest-degree generator of annihilator_in_base and re-checks
/// both membership facts. Throws CertificateFailure if anything is off.
TorsionCertificate make_certificate(const ModulePresentation& m, const FreeModuleVector& element,
                                    const Engine& engine = Engine{});

/// Independent re-check using membership tests only.
bool verify_certificate(const ModulePresentation& m, const TorsionCertificate& cert,
                        const Engine& engine = Engine{});

}  // namespace flatkit
