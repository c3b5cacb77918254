#include <doctest.h>

#include "flatkit/fibred_geometry.hpp"
#include "support.hpp"

using namespace flatkit;
using namespace flatkit::test;

namespace {

std::vector<Rational> pt(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

RingTower blowup() { return tower({"y1", "y2"}, {"x"}, {"x*y1 - y2"}); }

}  // namespace

TEST_CASE("fibre dimensions of the blowup chart") {
  CHECK(fibre_dimension_at(blowup(), pt({0, 0})) == 1);
  CHECK(fibre_dimension_at(blowup(), pt({1, 0})) == 0);
  CHECK(fibre_dimension_at(blowup(), pt({0, 1})) == -1);
  auto free = tower({"y1", "y2"}, {"x"});
  CHECK(fibre_dimension_at(free, pt({3, -2})) == 1);
  CHECK(fibre_dimension_at(free, pt({0, 0})) == 1);
  CHECK_THROWS_AS(fibre_dimension_at(blowup(), pt({1})), std::invalid_argument);
}

TEST_CASE("semicontinuity on a grid") {
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      int d = fibre_dimension_at(blowup(), pt({a, b}));
      CAPTURE(a);
      CAPTURE(b);
      if (a == 0 && b == 0) CHECK(d == 1);
      else if (a == 0) CHECK(d == -1);
      else CHECK(d == 0);
    }
}

TEST_CASE("image closures") {
  CHECK(image_closure(blowup()).is_zero());
  auto t = tower({"y1", "y2"}, {"x"}, {"x", "y1"});
  CHECK(same_submodule(image_closure(t), ideal(t.ring(), {"y1"})));
  auto u = tower({"y1"}, {"x"}, {"1"});
  CHECK(same_submodule(image_closure(u), ideal(u.ring(), {"1"})));
}

TEST_CASE("fibre reports and dominance") {
  auto r = fibre_report(blowup(), pt({0, 0}));
  CHECK(r.fibre_dimension_at_point == 1);
  CHECK(r.generic_fibre_dimension == 0);
  CHECK(r.source_dimension == 2);
  CHECK(r.dominant);
  CHECK(r.dominant == (r.generic_fibre_dimension == r.source_dimension - 2));
  auto t = tower({"y1", "y2"}, {"x"}, {"x", "y1"});
  auto r2 = fibre_report(t, pt({0, 5}));
  CHECK_FALSE(r2.dominant);
  CHECK(r2.dominant == (r2.generic_fibre_dimension == r2.source_dimension - 2));
  auto dc = fibre_report(tower({"y1", "y2"}, {"x"}, {"x^2 - y1"}), pt({4, 0}));
  CHECK(dc.dominant);
  CHECK(dc.generic_fibre_dimension == 0);
  CHECK(dc.fibre_dimension_at_point == 0);
}

TEST_CASE("algebraic verticality") {
  auto sq = blowup().power(2);
  auto whole = ComponentIdeal::over(sq, "whole", {});
  CHECK_FALSE(is_algebraically_vertical(sq, whole).vertical);
  auto exc = ComponentIdeal::over(sq, "exceptional", {P(sq.ring(), "y1"), P(sq.ring(), "y2")});
  auto v = is_algebraically_vertical(sq, exc);
  CHECK(v.vertical);
  CHECK(same_submodule(v.image, ideal(sq.ring(), {"y1", "y2"})));
  auto empty = ComponentIdeal::over(sq, "empty", {P(sq.ring(), "1")});
  auto ve = is_algebraically_vertical(sq, empty);
  CHECK(ve.vertical);
  CHECK(ve.empty_component);
  ComponentIdeal bare{"bare", {P(sq.ring(), "y1")}};
  CHECK_THROWS_AS(is_algebraically_vertical(sq, bare), std::invalid_argument);
}

TEST_CASE("openness witness") {
  auto sq = blowup().power(2);
  auto exc = ComponentIdeal::over(sq, "exceptional", {P(sq.ring(), "y1"), P(sq.ring(), "y2")});
  auto strict = ComponentIdeal::over(sq, "strict", {P(sq.ring(), "x1 - x2")});
  CHECK(openness_witness(sq, {exc, strict}) == std::vector<std::string>{"exceptional"});
  CHECK(openness_witness(sq, {ComponentIdeal::over(sq, "all", {})}).empty());
  auto free = tower({"y1", "y2"}, {"x"}).power(2);
  CHECK(openness_witness(free, {ComponentIdeal::over(free, "all", {}),
                                ComponentIdeal::over(free, "diag", {P(free.ring(), "x1 - x2")})})
            .empty());
}

TEST_CASE("fibred power ideal is symmetric under block permutation") {
  for (unsigned k = 2; k <= 3; ++k) {
    auto p = blowup().power(k);
    for (std::size_t a = 1; a <= k; ++a)
      for (std::size_t b = a + 1; b <= k; ++b) {
        auto swap = p.block_swap(a, b);
        std::vector<Polynomial> moved;
        for (const auto& g : p.relations()) moved.push_back(g.map_to(p.ring(), swap));
        CHECK(same_submodule(make_ideal(p.ring(), moved), make_ideal(p.ring(), p.relations())));
      }
  }
}
