#include "flatkit/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace flatkit {

namespace detail {

TermList to_terms(const FreeModuleVector& v, const MonomialOrder& order) {
  TermList out;
  for (std::size_t c = 0; c < v.rank(); ++c)
    for (const auto& [m, coeff] : v[c].terms()) out.push_back({c, m, coeff});
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.comp, a.mono, b.comp, b.mono) > 0;
  });
  return out;
}

FreeModuleVector from_terms(const TermList& terms, const RingPtr& ring, std::size_t rank) {
  std::vector<Polynomial::TermMap> maps(rank);
  for (const auto& t : terms) maps.at(t.comp).emplace(t.mono, t.coeff);
  std::vector<Polynomial> entries;
  entries.reserve(rank);
  for (auto& m : maps) entries.emplace_back(ring, std::move(m));
  return FreeModuleVector(std::move(entries));
}

TermList sub_mul(const TermList& a, const Rational& c, const Monomial& mult, const TermList& b,
                 const MonomialOrder& order) {
  TermList out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial shifted;
  bool have_shifted = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_shifted) {
      shifted = b[j].mono * mult;
      have_shifted = true;
    }
    if (j >= b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i >= a.size()) {
      out.push_back({b[j].comp, std::move(shifted), -c * b[j].coeff});
      ++j;
      have_shifted = false;
      continue;
    }
    auto cmp = order.compare(a[i].comp, a[i].mono, b[j].comp, shifted);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].comp, std::move(shifted), -c * b[j].coeff});
      ++j;
      have_shifted = false;
    } else {
      Rational v = a[i].coeff - c * b[j].coeff;
      if (v != 0) out.push_back({a[i].comp, a[i].mono, std::move(v)});
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  return out;
}

void make_monic(TermList& t) {
  if (t.empty() || t.front().coeff == 1) return;
  Rational inv = 1 / t.front().coeff;
  for (auto& term : t) term.coeff *= inv;
}

}  // namespace detail

using detail::Term;
using detail::TermList;

GroebnerBasis::GroebnerBasis(RingPtr ring, std::size_t rank, MonomialOrder order,
                             std::vector<TermList> elements, bool reduced)
    : ring_(std::move(ring)),
      rank_(rank),
      order_(std::move(order)),
      terms_(std::move(elements)),
      reduced_(reduced) {
  elements_.reserve(terms_.size());
  for (const auto& t : terms_) elements_.push_back(detail::from_terms(t, ring_, rank_));
}

bool GroebnerBasis::is_whole_module() const {
  std::vector<char> unit(rank_, 0);
  for (const auto& t : terms_)
    if (!t.empty() && t.front().mono.is_one()) unit[t.front().comp] = 1;
  return std::all_of(unit.begin(), unit.end(), [](char c) { return c != 0; });
}

namespace {

const TermList* find_reducer(const Term& lt, const std::vector<TermList>& basis,
                             std::size_t skip = static_cast<std::size_t>(-1)) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == skip) continue;
    const auto& g = basis[k];
    if (!g.empty() && g.front().comp == lt.comp && g.front().mono.divides(lt.mono)) return &g;
  }
  return nullptr;
}

TermList reduce_impl(TermList v, const std::vector<TermList>& basis, const MonomialOrder& order,
                     const Engine* engine, std::size_t skip) {
  TermList rem;
  std::size_t steps = 0;
  while (!v.empty()) {
    if (engine && (++steps & 63u) == 0) engine->check_deadline();
    const Term& lt = v.front();
    if (const TermList* g = find_reducer(lt, basis, skip)) {
      Rational c = lt.coeff / g->front().coeff;
      Monomial mult = lt.mono / g->front().mono;
      v = detail::sub_mul(v, c, mult, *g, order);
    } else {
      rem.push_back(std::move(v.front()));
      v.erase(v.begin());
    }
  }
  return rem;
}

TermList s_polynomial(const TermList& f, const TermList& g, const Monomial& l,
                      const MonomialOrder& order) {
  // Both inputs are monic here or scaled inside: lcm/lm_f * f / lc_f - lcm/lm_g * g / lc_g.
  TermList shifted_f;
  shifted_f.reserve(f.size());
  Monomial mf = l / f.front().mono;
  Rational inv_f = 1 / f.front().coeff;
  for (const auto& t : f) shifted_f.push_back({t.comp, t.mono * mf, t.coeff * inv_f});
  return detail::sub_mul(shifted_f, 1 / g.front().coeff, l / g.front().mono, g, order);
}

std::uint64_t max_degree_of(const TermList& t) {
  std::uint64_t d = 0;
  for (const auto& term : t) d = std::max(d, term.mono.degree());
  return d;
}

struct Pair {
  std::size_t i, j;
  std::size_t comp;
  Monomial lcm;
};

}  // namespace

TermList normal_form(TermList v, const std::vector<TermList>& basis, const MonomialOrder& order,
                     const Engine* engine) {
  return reduce_impl(std::move(v), basis, order, engine, static_cast<std::size_t>(-1));
}

FreeModuleVector normal_form(const FreeModuleVector& v, const GroebnerBasis& g) {
  if (v.rank() != g.rank()) throw std::invalid_argument("rank mismatch in normal form");
  if (!same_ring(v.ring(), g.ring())) throw std::invalid_argument("ring mismatch in normal form");
  auto rem = normal_form(detail::to_terms(v, g.order()), g.sorted_terms(), g.order());
  return detail::from_terms(rem, g.ring(), g.rank());
}

GroebnerBasis buchberger(const Submodule& gens, const MonomialOrder& order, const Engine& engine) {
  const ResourceLimits& lim = engine.limits();
  EngineStats& stats = engine.stats();
  ++stats.groebner_runs;
  if (order.nvars() != gens.ring->size())
    throw std::invalid_argument("order and ring have different variable counts");

  std::vector<TermList> basis;

  auto pair_less = [&order](const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (auto c = order.compare(a.comp, a.lcm, b.comp, b.lcm); c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](TermList f) {
    detail::make_monic(f);
    std::uint64_t deg = max_degree_of(f);
    stats.largest_degree = std::max(stats.largest_degree, deg);
    std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Term& a = basis[i].front();
      const Term& b = f.front();
      if (a.comp != b.comp) continue;
      if (gens.rank == 1 && a.mono.coprime(b.mono)) {
        ++stats.product_criterion_skips;
        continue;
      }
      queue.insert(Pair{i, n, a.comp, lcm(a.mono, b.mono)});
      pending.insert({i, n});
      ++stats.pairs_created;
    }
    basis.push_back(std::move(f));
    stats.largest_basis = std::max<std::uint64_t>(stats.largest_basis, basis.size());
    if (basis.size() > lim.max_basis)
      throw ResourceExceeded(LimitKind::BasisSize, std::to_string(basis.size()) + " basis elements");
    if (queue.size() > lim.max_pairs)
      throw ResourceExceeded(LimitKind::PairQueue, std::to_string(queue.size()) + " pending pairs");
  };

  for (const auto& g : gens.generators) {
    engine.check_deadline();
    auto r = normal_form(detail::to_terms(g, order), basis, order, &engine);
    if (!r.empty()) add(std::move(r));
  }

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!queue.empty()) {
    engine.check_deadline();
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      const Term& lk = basis[k].front();
      if (lk.comp == p.comp && lk.mono.divides(p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k))
        chain = true;
    }
    if (chain) {
      ++stats.chain_criterion_skips;
      continue;
    }
    if (p.lcm.degree() > lim.max_degree)
      throw ResourceExceeded(LimitKind::Degree,
                             "S-pair of degree " + std::to_string(p.lcm.degree()));

    ++stats.pairs_reduced;
    auto s = s_polynomial(basis[p.i], basis[p.j], p.lcm, order);
    auto r = normal_form(std::move(s), basis, order, &engine);
    if (r.empty()) {
      ++stats.zero_reductions;
      continue;
    }
    if (max_degree_of(r) > lim.max_degree)
      throw ResourceExceeded(LimitKind::Degree,
                             "basis element of degree " + std::to_string(max_degree_of(r)));
    add(std::move(r));
  }

  // Minimalize, then tail-reduce against the remaining leads.
  std::vector<TermList> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Term& li = basis[i].front();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Term& lj = basis[j].front();
      if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
      redundant = (lj.mono != li.mono) || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const TermList& a, const TermList& b) {
    return order.compare(a.front().comp, a.front().mono, b.front().comp, b.front().mono) > 0;
  });
  std::vector<TermList> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    auto r = reduce_impl(minimal[i], minimal, order, &engine, i);
    detail::make_monic(r);
    reduced.push_back(std::move(r));
  }
  return GroebnerBasis(gens.ring, gens.rank, order, std::move(reduced), true);
}

GroebnerBasis groebner(const Submodule& gens, const Engine& engine) {
  return buchberger(gens, MonomialOrder::grevlex(gens.ring->size()), engine);
}

bool membership(const FreeModuleVector& v, const GroebnerBasis& g) {
  return normal_form(v, g).is_zero();
}

bool membership(const FreeModuleVector& v, const Submodule& gens, const Engine& engine) {
  if (v.is_zero()) return true;
  return membership(v, groebner(gens, engine));
}

std::vector<FreeModuleVector> s_pair_remainders(const GroebnerBasis& g) {
  std::vector<FreeModuleVector> out;
  const auto& t = g.sorted_terms();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i].front().comp != t[j].front().comp) continue;
      Monomial l = lcm(t[i].front().mono, t[j].front().mono);
      auto r = normal_form(s_polynomial(t[i], t[j], l, g.order()), t, g.order());
      out.push_back(detail::from_terms(r, g.ring(), g.rank()));
    }
  return out;
}

Term leading_term(const FreeModuleVector& v, const MonomialOrder& order) {
  auto t = detail::to_terms(v, order);
  if (t.empty()) throw std::domain_error("leading term of zero vector");
  return t.front();
}

bool same_submodule(const Submodule& a, const Submodule& b, const Engine& engine) {
  if (a.rank != b.rank) return false;
  return groebner(a, engine).elements() == groebner(b, engine).elements();
}

bool is_contained(const Submodule& small, const Submodule& big, const Engine& engine) {
  auto g = groebner(big, engine);
  return std::all_of(small.generators.begin(), small.generators.end(),
                     [&](const FreeModuleVector& v) { return membership(v, g); });
}

}  // namespace flatkit
