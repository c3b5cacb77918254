#pragma once

#include <cstddef>
#include <vector>

#include "flatkit/module_vector.hpp"
#include "flatkit/order.hpp"

namespace flatkit::detail {

struct Term {
  std::size_t comp;
  Monomial mono;
  Rational coeff;
};

/// Module element as terms sorted strictly descending under one order. The
/// working representation of the reduction engine.
using TermList = std::vector<Term>;

TermList to_terms(const FreeModuleVector& v, const MonomialOrder& order);
FreeModuleVector from_terms(const TermList& terms, const RingPtr& ring, std::size_t rank);

/// a - c * mult * b, where mult * b stays sorted because orders are
/// multiplicative.
TermList sub_mul(const TermList& a, const Rational& c, const Monomial& mult, const TermList& b,
                 const MonomialOrder& order);

void make_monic(TermList& t);

}  // namespace flatkit::detail
