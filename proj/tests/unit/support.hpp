#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "flatkit/problem_file.hpp"

namespace flatkit::test {

/// Fiber variables (block 1) first, then the base.
inline RingPtr ring_of(std::initializer_list<std::string> fiber, std::initializer_list<std::string> base = {}) {
  std::vector<Variable> vars;
  for (const auto& x : fiber) vars.push_back({x, Block::fiber(1)});
  for (const auto& y : base) vars.push_back({y, Block::base()});
  return make_ring(std::move(vars));
}

inline Polynomial P(const RingPtr& r, std::string_view s) { return parse_polynomial(s, r); }

inline FreeModuleVector V(const RingPtr& r, std::initializer_list<std::string_view> entries) {
  std::vector<Polynomial> ps;
  for (auto e : entries) ps.push_back(P(r, e));
  return FreeModuleVector(std::move(ps));
}

inline Submodule ideal(const RingPtr& r, std::initializer_list<std::string_view> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(P(r, g));
  return make_ideal(r, ps);
}

inline RingTower tower(std::vector<std::string> base, std::vector<std::string> fiber,
                       std::initializer_list<std::string_view> rels = {}) {
  RingTower t(std::move(base), std::move(fiber));
  std::vector<Polynomial> ps;
  for (auto g : rels) ps.push_back(P(t.ring(), g));
  return t.with_relations(std::move(ps));
}

/// Random polynomial in `vars` with small integer coefficients.
inline Polynomial random_poly(std::mt19937& rng, const RingPtr& r, unsigned max_degree, unsigned max_terms) {
  std::vector<std::size_t> vars(r->size());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
  auto monos = monomials_up_to(r->size(), vars, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  Polynomial p(r);
  for (unsigned k = nterms(rng); k > 0; --k) p += Polynomial::term(r, monos[pick(rng)], Rational(coeff(rng)));
  return p;
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t nvars, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<Exponent> exps(nvars);
  for (auto& x : exps) x = e(rng);
  return Monomial(std::move(exps));
}

}  // namespace flatkit::test
