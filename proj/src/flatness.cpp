#include "flatkit/flatness.hpp"

#include <stdexcept>

#include "flatkit/ideal_ops.hpp"

namespace flatkit {

std::string to_string(FlatnessStatus s) {
  switch (s) {
    case FlatnessStatus::Flat: return "flat";
    case FlatnessStatus::NotFlat: return "not-flat";
    case FlatnessStatus::Inconclusive: return "inconclusive";
    case FlatnessStatus::ResourceExceeded: return "resource-exceeded";
  }
  return "unknown";
}

FlatnessProblem::FlatnessProblem(RingTower algebra, std::optional<ModuleSpec> module)
    : algebra_(std::move(algebra)), module_(std::move(module)) {
  if (algebra_.block_count() != 1)
    throw std::invalid_argument("a flatness problem is stated over a single fiber block");
  if (module_) {
    if (module_->rank == 0) throw std::invalid_argument("module rank must be positive");
    for (const auto& r : module_->rows) {
      if (r.rank() != module_->rank) throw std::invalid_argument("module row has the wrong rank");
      if (!same_ring(r.ring(), algebra_.ring()))
        throw std::invalid_argument("module row lives in another ring");
    }
  }
}

ModulePresentation FlatnessProblem::module() const {
  if (!module_) return ModulePresentation::algebra(algebra_);
  return ModulePresentation(algebra_, module_->rank, module_->rows);
}

namespace {

void finish(FlatnessVerdict& v, const Engine& engine) {
  v.stats = engine.stats();
  v.elapsed = engine.elapsed();
}

bool vanishes_at_origin(const Polynomial& p) { return p.constant_term() == 0; }

}  // namespace

FlatnessVerdict flat_check(const FlatnessProblem& problem, std::optional<unsigned> power_override,
                           const ResourceLimits& limits) {
  Engine engine(limits);
  FlatnessVerdict v;
  const auto n = static_cast<unsigned>(problem.base_dimension());
  if (power_override && *power_override == 0) throw std::invalid_argument("power must be at least 1");
  if (n == 0) {
    v.status = FlatnessStatus::Flat;
    v.power_used = power_override.value_or(0);
    v.notices.push_back("no base variables: R is a field and every module is flat");
    finish(v, engine);
    return v;
  }
  const unsigned k = power_override.value_or(n);
  v.power_used = k;
  v.authoritative = k >= n;
  try {
    auto f = problem.module();
    if (is_zero_module(f, engine)) {
      v.status = FlatnessStatus::Flat;
      v.notices.push_back("F is the zero module; reported flat by convention");
      finish(v, engine);
      return v;
    }
    auto power = tensor_power(f, k);
    auto torsion = torsion_submodule(power, engine);
    if (torsion.generators.empty()) {
      if (k >= n) {
        v.status = FlatnessStatus::Flat;
      } else {
        v.status = FlatnessStatus::Inconclusive;
        v.notices.push_back("inconclusive: power " + std::to_string(k) + " < base dimension " +
                            std::to_string(n) + "; torsion-freeness here does not imply flatness");
      }
    } else {
      v.status = FlatnessStatus::NotFlat;
      v.certificate = make_certificate(power, torsion.generators.front(), engine);
      if (k < n)
        v.notices.push_back("torsion already at power " + std::to_string(k) + " < base dimension " +
                            std::to_string(n) + "; F is not flat");
    }
    v.tested_module = std::move(power);
  } catch (const ResourceExceeded& e) {
    v.status = FlatnessStatus::ResourceExceeded;
    v.certificate.reset();
    v.notices.push_back(e.what());
  }
  finish(v, engine);
  return v;
}

std::optional<unsigned> first_torsion_power(const FlatnessProblem& problem, const Engine& engine) {
  const auto n = static_cast<unsigned>(problem.base_dimension());
  auto f = problem.module();
  for (unsigned k = 1; k <= n; ++k)
    if (!is_torsion_free(tensor_power(f, k), engine)) return k;
  return std::nullopt;
}

FlatnessVerdict flat_at_origin(const FlatnessProblem& problem, const ResourceLimits& limits) {
  for (const auto& g : problem.algebra().relations())
    if (!vanishes_at_origin(g))
      throw OriginNotOnVariety("the origin is not on V(I): " + g.to_string() + " does not vanish there");
  Engine engine(limits);
  FlatnessVerdict v;
  v.scope = VerdictScope::AtOrigin;
  const auto n = static_cast<unsigned>(problem.base_dimension());
  v.power_used = n;
  if (n == 0) {
    v.status = FlatnessStatus::Flat;
    v.notices.push_back("no base variables: R is a field and every module is flat");
    finish(v, engine);
    return v;
  }
  try {
    auto power = tensor_power(problem.module(), n);
    auto torsion = torsion_submodule(power, engine);
    if (torsion.generators.empty()) {
      v.status = FlatnessStatus::Flat;
    } else {
      const auto rel = power.submodule();
      std::optional<Submodule> ann_total;
      std::optional<FreeModuleVector> local_witness;
      for (const auto& t : torsion.generators) {
        auto ann = colon(rel, t, engine);
        bool at_origin = true;
        for (const auto& g : ann.generators) at_origin = at_origin && vanishes_at_origin(g[0]);
        if (at_origin && !local_witness) local_witness = t;
        ann_total = ann_total ? intersect(*ann_total, ann, engine) : ann;
      }
      bool supported = true;
      for (const auto& g : ann_total->generators) supported = supported && vanishes_at_origin(g[0]);
      if (supported != local_witness.has_value())
        throw std::logic_error("support of torsion disagrees with its generators' supports");
      if (supported) {
        v.status = FlatnessStatus::NotFlat;
        v.certificate = make_certificate(power, *local_witness, engine);
      } else {
        v.status = FlatnessStatus::Flat;
        v.notices.push_back("torsion exists but is supported away from the origin");
      }
    }
    v.tested_module = std::move(power);
  } catch (const ResourceExceeded& e) {
    v.status = FlatnessStatus::ResourceExceeded;
    v.certificate.reset();
    v.notices.push_back(e.what());
  }
  finish(v, engine);
  return v;
}

}  // namespace flatkit
