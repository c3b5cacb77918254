#include "flatkit/module_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "flatkit/ideal_ops.hpp"

namespace flatkit {

ModulePresentation::ModulePresentation(RingTower tower, std::size_t rank,
                                       std::vector<FreeModuleVector> relations)
    : tower_(std::move(tower)), rank_(rank) {
  if (rank_ == 0) throw std::invalid_argument("module rank must be positive");
  auto push = [this](FreeModuleVector v) {
    if (v.rank() != rank_) throw std::invalid_argument("relation rank does not match module rank");
    if (!same_ring(v.ring(), tower_.ring())) throw std::invalid_argument("relation in another ring");
    if (v.is_zero()) return;
    if (std::find(relations_.begin(), relations_.end(), v) == relations_.end())
      relations_.push_back(std::move(v));
  };
  for (auto& r : relations) push(std::move(r));
  for (const auto& p : tower_.relations())
    for (std::size_t i = 0; i < rank_; ++i) {
      FreeModuleVector v(tower_.ring(), rank_);
      v[i] = p;
      push(std::move(v));
    }
}

ModulePresentation ModulePresentation::algebra(const RingTower& tower) {
  return ModulePresentation(tower, 1, {});
}

ModulePresentation ModulePresentation::free(const RingTower& tower, std::size_t rank) {
  return ModulePresentation(tower.with_relations({}), rank, {});
}

ModulePresentation tensor_presentation(const ModulePresentation& m1, const ModulePresentation& m2) {
  auto combined = RingTower::combine(m1.tower(), m2.tower());
  const RingPtr& ring = combined.tower.ring();
  const std::size_t b1 = m1.rank(), b2 = m2.rank(), b = b1 * b2;
  std::vector<FreeModuleVector> rels;
  for (const auto& r : m1.relations()) {
    auto mapped = r.map_to(ring, combined.left_map);
    for (std::size_t j = 0; j < b2; ++j) {
      FreeModuleVector v(ring, b);
      for (std::size_t i = 0; i < b1; ++i) v[i * b2 + j] = mapped[i];
      rels.push_back(std::move(v));
    }
  }
  for (std::size_t i = 0; i < b1; ++i)
    for (const auto& r : m2.relations()) {
      auto mapped = r.map_to(ring, combined.right_map);
      FreeModuleVector v(ring, b);
      for (std::size_t j = 0; j < b2; ++j) v[i * b2 + j] = mapped[j];
      rels.push_back(std::move(v));
    }
  return ModulePresentation(std::move(combined.tower), b, std::move(rels));
}

ModulePresentation tensor_power(const ModulePresentation& m, unsigned k) {
  if (k == 0) throw std::invalid_argument("tensor power needs k >= 1");
  ModulePresentation result = m;
  for (unsigned j = 2; j <= k; ++j) result = tensor_presentation(result, m);
  return result;
}

namespace {

MonomialOrder torsion_order(const RingTower& tower) {
  return MonomialOrder(tower.ring()->size(),
                       {{tower.fiber_indices(), InnerOrder::Grevlex},
                        {tower.base_indices(), InnerOrder::Grevlex}},
                       1);
}

/// Coefficient (a polynomial in the base) of the leading fiber-term of g.
Polynomial base_lead_coefficient(const detail::TermList& g, const std::vector<std::size_t>& fiber,
                                 const RingPtr& ring) {
  const auto& lead = g.front();
  Monomial fiber_part = lead.mono.restricted_to(fiber);
  Polynomial::TermMap coeff;
  for (const auto& t : g) {
    if (t.comp != lead.comp || t.mono.restricted_to(fiber) != fiber_part) break;
    coeff.emplace(t.mono.without(fiber), t.coeff);
  }
  return Polynomial(ring, std::move(coeff));
}

}  // namespace

TorsionSubmodule torsion_submodule(const ModulePresentation& m, const Engine& engine) {
  const RingPtr& ring = m.ring();
  auto relations_gb = groebner(m.submodule(), engine);
  TorsionSubmodule out{{}, Polynomial::constant(ring, 1), {}, relations_gb.submodule()};
  if (m.tower().base_dimension() == 0) return out;

  auto fiber = m.tower().fiber_indices();
  auto gb = buchberger(m.submodule(), torsion_order(m.tower()), engine);
  const auto grevlex = MonomialOrder::grevlex(ring->size());
  for (const auto& g : gb.sorted_terms()) {
    Polynomial lc = base_lead_coefficient(g, fiber, ring);
    if (lc.is_constant()) continue;
    lc = lc.monic(grevlex);
    if (std::find(out.clearing_factors.begin(), out.clearing_factors.end(), lc) ==
        out.clearing_factors.end())
      out.clearing_factors.push_back(lc);
  }
  if (out.clearing_factors.empty()) return out;

  // (N : (f1...fk)^∞) = (...((N : f1^∞) : f2^∞)...) : fk^∞; one factor at a time
  // keeps the auxiliary elements small.
  Submodule sat = relations_gb.submodule();
  for (const auto& f : out.clearing_factors) {
    out.clearing *= f;
    sat = saturate(sat, f, engine);
  }
  out.saturation = sat;
  for (const auto& g : sat.generators) {
    auto r = normal_form(g, relations_gb);
    if (!r.is_zero() && std::find(out.generators.begin(), out.generators.end(), r) == out.generators.end())
      out.generators.push_back(std::move(r));
  }
  return out;
}

bool is_torsion_free(const ModulePresentation& m, const Engine& engine) {
  return torsion_submodule(m, engine).generators.empty();
}

bool is_zero_module(const ModulePresentation& m, const Engine& engine) {
  return groebner(m.submodule(), engine).is_whole_module();
}

Submodule annihilator_in_base(const ModulePresentation& m, const FreeModuleVector& element,
                              const Engine& engine) {
  const RingPtr& ring = m.ring();
  if (membership(element, m.submodule(), engine))
    return make_ideal(ring, {Polynomial::constant(ring, 1)});
  auto ann = colon(m.submodule(), element, engine);
  return eliminate(ann, m.tower().fiber_indices(), engine);
}

TorsionCertificate make_certificate(const ModulePresentation& m, const FreeModuleVector& element,
                                    const Engine& engine) {
  auto ann = annihilator_in_base(m, element, engine);
  const Polynomial* best = nullptr;
  for (const auto& g : ann.generators)
    if (!g[0].is_zero() && (!best || g[0].total_degree() < best->total_degree())) best = &g[0];
  if (!best) throw CertificateFailure("element " + element.to_string() + " is not R-torsion");
  TorsionCertificate cert{element, *best, false, false};
  auto gb = groebner(m.submodule(), engine);
  cert.product_in_relations = membership(cert.annihilator * element, gb);
  cert.element_outside_relations = !membership(element, gb);
  if (!cert.annihilator.only_in(m.tower().base_indices()) || !cert.product_in_relations ||
      !cert.element_outside_relations)
    throw CertificateFailure("certificate (" + element.to_string() + ", " +
                             cert.annihilator.to_string() + ") failed re-verification");
  return cert;
}

bool verify_certificate(const ModulePresentation& m, const TorsionCertificate& cert,
                        const Engine& engine) {
  if (cert.annihilator.is_zero() || !cert.annihilator.only_in(m.tower().base_indices()))
    return false;
  if (cert.element.rank() != m.rank()) return false;
  auto gb = groebner(m.submodule(), engine);
  return membership(cert.annihilator * cert.element, gb) && !membership(cert.element, gb);
}

}  // namespace flatkit
