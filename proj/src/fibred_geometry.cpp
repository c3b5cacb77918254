#include "flatkit/fibred_geometry.hpp"

#include <stdexcept>

namespace flatkit {

int fibre_dimension_at(const RingTower& algebra, const std::vector<Rational>& point,
                       const Engine& engine) {
  auto base = algebra.base_indices();
  if (point.size() != base.size())
    throw std::invalid_argument("point needs one coordinate per base variable");
  std::map<std::size_t, Rational> assignment;
  for (std::size_t i = 0; i < base.size(); ++i) assignment.emplace(base[i], point[i]);
  std::vector<Polynomial> fibre;
  for (const auto& g : algebra.relations()) fibre.push_back(evaluate(g, assignment));
  return krull_dimension(make_ideal(algebra.ring(), fibre), algebra.fiber_indices(), engine).as_int();
}

Submodule image_closure(const RingTower& tower, const std::vector<Polynomial>& gens,
                        const Engine& engine) {
  return eliminate(make_ideal(tower.ring(), gens), tower.fiber_indices(), engine);
}

Submodule image_closure(const RingTower& tower, const Engine& engine) {
  return image_closure(tower, tower.relations(), engine);
}

namespace {

int image_dimension(const RingTower& tower, const Submodule& image, const Engine& engine) {
  return krull_dimension(image, tower.base_indices(), engine).as_int();
}

}  // namespace

int generic_fibre_dimension(const RingTower& algebra, const Engine& engine) {
  auto source = krull_dimension(make_ideal(algebra.ring(), algebra.relations()), engine);
  if (source.is_empty()) return -1;
  return source.value - image_dimension(algebra, image_closure(algebra, engine), engine);
}

FibreReport fibre_report(const RingTower& algebra, const std::vector<Rational>& point,
                         const Engine& engine) {
  auto image = image_closure(algebra, engine);
  FibreReport r{point, fibre_dimension_at(algebra, point, engine), -1, -1, image, image.is_zero()};
  auto source = krull_dimension(make_ideal(algebra.ring(), algebra.relations()), engine);
  r.source_dimension = source.as_int();
  if (!source.is_empty()) r.generic_fibre_dimension = source.value - image_dimension(algebra, image, engine);
  return r;
}

ComponentIdeal ComponentIdeal::over(const RingTower& tower, std::string label,
                                    std::vector<Polynomial> generators) {
  for (const auto& r : tower.relations()) generators.push_back(r);
  return {std::move(label), std::move(generators)};
}

Verticality is_algebraically_vertical(const RingTower& tower, const ComponentIdeal& component,
                                      const Engine& engine) {
  auto q = make_ideal(tower.ring(), component.generators);
  auto gb = groebner(q, engine);
  for (const auto& r : tower.relations())
    if (!membership(FreeModuleVector(r), gb))
      throw std::invalid_argument("component '" + component.label +
                                  "' does not contain the fibred-power relation " + r.to_string());
  Verticality v{false, gb.is_whole_module(), image_closure(tower, component.generators, engine)};
  v.vertical = !v.image.is_zero();
  return v;
}

std::vector<std::string> openness_witness(const RingTower& tower,
                                          const std::vector<ComponentIdeal>& components,
                                          const Engine& engine) {
  std::vector<std::string> out;
  for (const auto& c : components)
    if (is_algebraically_vertical(tower, c, engine).vertical) out.push_back(c.label);
  return out;
}

}  // namespace flatkit
