#include "flatkit/ideal_ops.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace flatkit {

namespace {

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

struct AuxRing {
  RingPtr ring;
  std::size_t t;
  std::vector<std::size_t> up;    // original -> extended
  std::vector<std::size_t> down;  // extended -> original (t maps nowhere useful)
};

AuxRing extend_with_t(const RingPtr& ring) {
  AuxRing a{with_aux_variable(ring), ring->size(), identity_map(ring->size()), {}};
  a.down = identity_map(ring->size());
  a.down.push_back(0);  // t never survives elimination
  return a;
}

Submodule map_down(const Submodule& n, const AuxRing& a, const RingPtr& original) {
  std::vector<FreeModuleVector> gens;
  for (const auto& g : n.generators) {
    if (g.involves_any({a.t})) throw std::logic_error("auxiliary variable survived elimination");
    gens.push_back(g.map_to(original, a.down));
  }
  return Submodule(original, n.rank, std::move(gens));
}

}  // namespace

Submodule eliminate(const Submodule& n, const std::vector<std::size_t>& kill, const Engine& engine) {
  if (kill.empty()) return groebner(n, engine).submodule();
  auto order = MonomialOrder::elimination(n.ring->size(), kill);
  auto gb = buchberger(n, order, engine);
  std::vector<FreeModuleVector> kept;
  for (const auto& g : gb.elements())
    if (!g.involves_any(kill)) kept.push_back(g);
  return Submodule(n.ring, n.rank, std::move(kept));
}

Submodule eliminate(const Submodule& n, const std::vector<Block>& kill_blocks, const Engine& engine) {
  std::vector<std::size_t> kill;
  for (const auto& b : kill_blocks) {
    auto idx = n.ring->indices_in(b);
    kill.insert(kill.end(), idx.begin(), idx.end());
  }
  std::sort(kill.begin(), kill.end());
  kill.erase(std::unique(kill.begin(), kill.end()), kill.end());
  return eliminate(n, kill, engine);
}

Submodule intersect(const Submodule& n1, const Submodule& n2, const Engine& engine) {
  if (n1.rank != n2.rank) throw std::invalid_argument("intersect: rank mismatch");
  if (!same_ring(n1.ring, n2.ring)) throw std::invalid_argument("intersect: ring mismatch");
  auto a = extend_with_t(n1.ring);
  Polynomial t = Polynomial::variable(a.ring, a.t);
  Polynomial one_minus_t = Polynomial::constant(a.ring, 1) - t;
  Submodule big(a.ring, n1.rank);
  for (const auto& v : n1.generators) big.generators.push_back(t * v.map_to(a.ring, a.up));
  for (const auto& w : n2.generators) big.generators.push_back(one_minus_t * w.map_to(a.ring, a.up));
  return map_down(eliminate(big, std::vector<std::size_t>{a.t}, engine), a, n1.ring);
}

Submodule colon(const Submodule& n, const FreeModuleVector& m, const Engine& engine) {
  if (m.rank() != n.rank) throw std::invalid_argument("colon: rank mismatch");
  const std::size_t b = n.rank;
  Submodule ext(n.ring, b + 1);
  {
    std::vector<Polynomial> e(m.entries());
    e.push_back(Polynomial::constant(n.ring, 1));
    ext.generators.emplace_back(std::move(e));
  }
  for (const auto& g : n.generators) {
    std::vector<Polynomial> e(g.entries());
    e.push_back(Polynomial(n.ring));
    ext.generators.emplace_back(std::move(e));
  }
  auto gb = groebner(ext, engine);
  std::vector<FreeModuleVector> out;
  for (const auto& t : gb.sorted_terms())
    if (t.front().comp == b) out.push_back(FreeModuleVector(detail::from_terms(t, n.ring, b + 1)[b]));
  return Submodule(n.ring, 1, std::move(out));
}

Submodule module_colon(const Submodule& n, const Polynomial& h, const Engine& engine) {
  const std::size_t b = n.rank;
  Submodule ext(n.ring, 2 * b);
  for (std::size_t i = 0; i < b; ++i) {
    FreeModuleVector v(n.ring, 2 * b);
    v[i] = h;
    v[b + i] = Polynomial::constant(n.ring, 1);
    ext.generators.push_back(std::move(v));
  }
  for (const auto& g : n.generators) {
    FreeModuleVector v(n.ring, 2 * b);
    for (std::size_t i = 0; i < b; ++i) v[i] = g[i];
    ext.generators.push_back(std::move(v));
  }
  auto gb = groebner(ext, engine);
  std::vector<FreeModuleVector> out;
  for (std::size_t k = 0; k < gb.size(); ++k) {
    if (gb.sorted_terms()[k].front().comp < b) continue;
    const auto& full = gb.elements()[k];
    std::vector<Polynomial> tail(full.entries().begin() + static_cast<long>(b), full.entries().end());
    out.emplace_back(std::move(tail));
  }
  return Submodule(n.ring, b, std::move(out));
}

Submodule saturate(const Submodule& n, const Polynomial& h, const Engine& engine) {
  if (h.is_zero()) throw std::invalid_argument("saturate: h must be nonzero");
  if (h.is_constant()) return groebner(n, engine).submodule();
  auto a = extend_with_t(n.ring);
  Polynomial t = Polynomial::variable(a.ring, a.t);
  Polynomial inv = Polynomial::constant(a.ring, 1) - t * h.map_to(a.ring, a.up);
  Submodule big(a.ring, n.rank);
  for (const auto& v : n.generators) big.generators.push_back(v.map_to(a.ring, a.up));
  for (std::size_t i = 0; i < n.rank; ++i)
    big.generators.push_back(inv * FreeModuleVector::unit(a.ring, n.rank, i));
  auto down = map_down(eliminate(big, std::vector<std::size_t>{a.t}, engine), a, n.ring);
  return groebner(down, engine).submodule();
}

Submodule saturate_by_colon(const Submodule& n, const Polynomial& h, const Engine& engine) {
  if (h.is_zero()) throw std::invalid_argument("saturate: h must be nonzero");
  auto current = groebner(n, engine);
  for (;;) {
    engine.check_deadline();
    auto next = groebner(module_colon(current.submodule(), h, engine), engine);
    if (next.elements() == current.elements()) return current.submodule();
    current = std::move(next);
  }
}

std::vector<std::size_t> maximal_independent_set(const std::vector<Monomial>& leads,
                                                 const std::vector<std::size_t>& vars) {
  if (vars.size() > 64) throw std::invalid_argument("independent set search limited to 64 variables");
  std::vector<std::uint64_t> supports;
  for (const auto& m : leads) {
    std::uint64_t mask = 0;
    bool outside = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      auto it = std::find(vars.begin(), vars.end(), i);
      if (it == vars.end()) {
        outside = true;
        break;
      }
      mask |= std::uint64_t{1} << (it - vars.begin());
    }
    if (!outside) supports.push_back(mask);
  }
  auto valid = [&](std::uint64_t set) {
    return std::none_of(supports.begin(), supports.end(),
                        [&](std::uint64_t s) { return (s & ~set) == 0; });
  };
  std::uint64_t best = 0;
  int best_size = -1;
  auto popcount = [](std::uint64_t x) { return __builtin_popcountll(x); };
  auto dfs = [&](auto&& self, std::size_t pos, std::uint64_t cur) -> void {
    int size = popcount(cur);
    if (size + static_cast<int>(vars.size() - pos) <= best_size) return;
    if (pos == vars.size()) {
      best = cur;
      best_size = size;
      return;
    }
    std::uint64_t with = cur | (std::uint64_t{1} << pos);
    if (valid(with)) self(self, pos + 1, with);
    self(self, pos + 1, cur);
  };
  if (!valid(0)) return {};
  dfs(dfs, 0, 0);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < vars.size(); ++k)
    if (best & (std::uint64_t{1} << k)) out.push_back(vars[k]);
  return out;
}

KrullDimension krull_dimension(const Submodule& ideal, const std::vector<std::size_t>& vars,
                               const Engine& engine) {
  if (ideal.rank != 1) throw std::invalid_argument("krull_dimension needs an ideal");
  for (const auto& g : ideal.generators)
    if (!g[0].only_in(vars))
      throw std::invalid_argument("krull_dimension: generator uses a variable outside the space");
  auto gb = groebner(ideal, engine);
  if (gb.is_whole_module()) return KrullDimension::empty();
  std::vector<Monomial> leads;
  for (const auto& t : gb.sorted_terms()) leads.push_back(t.front().mono);
  return KrullDimension::of(static_cast<int>(maximal_independent_set(leads, vars).size()));
}

KrullDimension krull_dimension(const Submodule& ideal, const Engine& engine) {
  return krull_dimension(ideal, identity_map(ideal.ring->size()), engine);
}

}  // namespace flatkit
