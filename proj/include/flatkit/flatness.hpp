#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flatkit/module_algebra.hpp"

namespace flatkit {

/// F = S^rank / (rows + I*S^rank) over A = Q[y][x]/I.
struct ModuleSpec {
  std::size_t rank = 1;
  std::vector<FreeModuleVector> rows;
};

/// A finitely generated module F over A = R[x]/I with R = Q[y1..yn].
/// Without a module spec, F = A.
class FlatnessProblem {
 public:
  /// `algebra` is a one-block tower whose relations are the generators of I.
  explicit FlatnessProblem(RingTower algebra, std::optional<ModuleSpec> module = std::nullopt);

  const RingTower& algebra() const noexcept { return algebra_; }
  std::size_t base_dimension() const noexcept { return algebra_.base_dimension(); }
  const std::optional<ModuleSpec>& module_spec() const noexcept { return module_; }

  /// The presentation of F.
  ModulePresentation module() const;

 private:
  RingTower algebra_;
  std::optional<ModuleSpec> module_;
};

enum class FlatnessStatus { Flat, NotFlat, Inconclusive, ResourceExceeded };
enum class VerdictScope { Global, AtOrigin };

std::string to_string(FlatnessStatus s);

struct FlatnessVerdict {
  FlatnessStatus status = FlatnessStatus::Inconclusive;
  VerdictScope scope = VerdictScope::Global;
  unsigned power_used = 0;
  /// False when a power below the base dimension was used.
  bool authoritative = true;
  std::optional<TorsionCertificate> certificate;
  /// The tensor power the verdict refers to; a certificate is relative to it.
  std::optional<ModulePresentation> tested_module;
  std::vector<std::string> notices;
  EngineStats stats;
  std::chrono::milliseconds elapsed{0};
};

/// Flat iff the n-fold tensor power of F over R (n = number of base
/// variables) has no R-torsion; a NotFlat verdict carries a verified
/// certificate. `power_override` below n can only prove non-flatness; a
/// torsion-free result at such a power is reported Inconclusive.
/// Resource exhaustion becomes a ResourceExceeded verdict, not an exception.
FlatnessVerdict flat_check(const FlatnessProblem& problem,
                           std::optional<unsigned> power_override = std::nullopt,
                           const ResourceLimits& limits = {});

/// Smallest k <= n with torsion in F^{⊗k}; nullopt means none, i.e. flat.
/// Throws ResourceExceeded.
std::optional<unsigned> first_torsion_power(const FlatnessProblem& problem,
                                            const Engine& engine = Engine{});

class OriginNotOnVariety : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Flatness of F localized at the origin (all variables zero) of A: NotFlat
/// iff the origin of the n-fold fibred power lies in the support of the
/// torsion of F^{⊗n}, i.e. every generator of Ann(T) vanishes there.
/// Throws OriginNotOnVariety when the origin is not on V(I).
FlatnessVerdict flat_at_origin(const FlatnessProblem& problem, const ResourceLimits& limits = {});

}  // namespace flatkit
