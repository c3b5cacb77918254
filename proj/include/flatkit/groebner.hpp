#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "flatkit/detail/term_list.hpp"
#include "flatkit/engine.hpp"
#include "flatkit/module_vector.hpp"
#include "flatkit/order.hpp"

namespace flatkit {

/// A Groebner basis of a submodule of S^rank (rank 1: an ideal).
///
/// Bases returned by `buchberger` are reduced: monic, no lead term divides
/// another, tails fully reduced, elements sorted by descending lead term.
/// For a fixed order the reduced basis is unique, which is what makes
/// results reproducible.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::size_t rank, MonomialOrder order,
                std::vector<detail::TermList> elements, bool reduced);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const MonomialOrder& order() const noexcept { return order_; }
  bool reduced() const noexcept { return reduced_; }
  std::size_t size() const noexcept { return terms_.size(); }

  const std::vector<FreeModuleVector>& elements() const noexcept { return elements_; }
  const std::vector<detail::TermList>& sorted_terms() const noexcept { return terms_; }
  Submodule submodule() const { return {ring_, rank_, elements_}; }

  /// True iff the basis generates all of S^rank.
  bool is_whole_module() const;

 private:
  RingPtr ring_;
  std::size_t rank_;
  MonomialOrder order_;
  std::vector<detail::TermList> terms_;
  std::vector<FreeModuleVector> elements_;
  bool reduced_;
};

/// Full reduction: no term of the result is divisible by a lead term of `g`.
FreeModuleVector normal_form(const FreeModuleVector& v, const GroebnerBasis& g);
detail::TermList normal_form(detail::TermList v, const std::vector<detail::TermList>& basis,
                             const MonomialOrder& order, const Engine* engine = nullptr);

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first) and the product and chain criteria. Throws ResourceExceeded.
GroebnerBasis buchberger(const Submodule& gens, const MonomialOrder& order,
                         const Engine& engine = Engine{});

/// The reduced basis under the default order (position-over-term, grevlex).
GroebnerBasis groebner(const Submodule& gens, const Engine& engine = Engine{});

bool membership(const FreeModuleVector& v, const Submodule& gens, const Engine& engine = Engine{});
bool membership(const FreeModuleVector& v, const GroebnerBasis& g);

/// Normal forms of every S-pair of `g` (components matching). All zero iff
/// `g` is a Groebner basis; used by the tests as a direct fixed-point check.
std::vector<FreeModuleVector> s_pair_remainders(const GroebnerBasis& g);

/// Lead term of a nonzero vector under `order`: (component, monomial, coeff).
detail::Term leading_term(const FreeModuleVector& v, const MonomialOrder& order);

/// Same submodule, decided by comparing reduced bases.
bool same_submodule(const Submodule& a, const Submodule& b, const Engine& engine = Engine{});
/// Every generator of `small` lies in `big`.
bool is_contained(const Submodule& small, const Submodule& big, const Engine& engine = Engine{});

}  // namespace flatkit
