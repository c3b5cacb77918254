#include <doctest.h>

#include "flatkit/ideal_ops.hpp"
#include "support.hpp"

using namespace flatkit;
using namespace flatkit::test;

namespace {

bool contains_poly(const Submodule& s, const Polynomial& p) {
  for (const auto& g : s.generators)
    if (g[0] == p || g[0] == -p) return true;
  return false;
}

}  // namespace

TEST_CASE("normal forms") {
  auto r = ring_of({"x", "y"});
  auto g = groebner(ideal(r, {"x^2 - y"}));
  CHECK(normal_form(V(r, {"x^2 + y"}), g) == V(r, {"2*y"}));
  CHECK(normal_form(V(r, {"x^2 - y"}), g).is_zero());
  auto g2 = groebner(ideal(r, {"x", "y"}));
  CHECK(normal_form(V(r, {"1"}), g2) == V(r, {"1"}));
}

TEST_CASE("implicitization by lex") {
  auto r = ring_of({"t", "x", "y"});
  auto g = buchberger(ideal(r, {"x - t", "y - t^2"}), MonomialOrder::lex(3));
  bool found = false;
  for (const auto& e : g.elements()) found = found || e[0] == P(r, "y - x^2") || e[0] == P(r, "x^2 - y");
  CHECK(found);
}

TEST_CASE("reduced bases") {
  auto r = ring_of({"x"});
  auto g = groebner(ideal(r, {"x^2", "x^3"}));
  REQUIRE(g.size() == 1);
  CHECK(g.elements()[0] == V(r, {"x^2"}));
  auto r2 = ring_of({"x1", "x2"}, {"y1", "y2"});
  auto blow = buchberger(ideal(r2, {"x1*y1 - y2", "x2*y1 - y2"}), MonomialOrder::elimination(4, {0, 1}));
  // y1*(x1 - x2) = g1 - g2 reduces to zero; the S-pair leaves y2*(x1 - x2)
  bool has = false;
  for (const auto& e : blow.elements()) has = has || e[0] == P(r2, "y2*(x1 - x2)");
  CHECK(has);
  CHECK(blow.size() == 3);
  CHECK(normal_form(V(r2, {"y1*(x1 - x2)"}), blow).is_zero());
  for (const auto& s : s_pair_remainders(blow)) CHECK(s.is_zero());
}

TEST_CASE("membership") {
  auto r = ring_of({"x1", "x2"}, {"y1", "y2"});
  auto n = ideal(r, {"x1*y1 - y2", "x2*y1 - y2"});
  CHECK(membership(V(r, {"y1*(x1 - x2)"}), n));
  CHECK_FALSE(membership(V(r, {"x1 - x2"}), n));
  CHECK(membership(V(r, {"0"}), n));
}

TEST_CASE("elimination") {
  auto r = ring_of({"t", "x", "y"});
  auto e = eliminate(ideal(r, {"x - t", "y - t^2"}), std::vector<std::size_t>{0});
  REQUIRE(e.generators.size() == 1);
  CHECK(contains_poly(e, P(r, "y - x^2")));
  auto r2 = ring_of({"x"}, {"y1"});
  auto e2 = eliminate(ideal(r2, {"x", "y1"}), std::vector<std::size_t>{0});
  CHECK(same_submodule(e2, ideal(r2, {"y1"})));
  auto r3 = ring_of({"x1", "x2"}, {"y1", "y2"});
  auto e3 = eliminate(ideal(r3, {"x1*y1 - y2", "x2*y1 - y2"}), std::vector<Block>{Block::fiber(1)});
  CHECK(e3.is_zero());
}

TEST_CASE("module elimination keeps kill-free elements") {
  auto r = ring_of({"t"}, {"a", "b"});
  Submodule n(r, 2, {V(r, {"t", "a"}), V(r, {"t", "b"})});
  auto e = eliminate(n, std::vector<std::size_t>{0});
  CHECK(is_contained(Submodule(r, 2, {V(r, {"0", "a - b"})}), e));
  for (const auto& g : e.generators) {
    CHECK_FALSE(g.involves_any({0}));
    CHECK(membership(g, n));
  }
}

TEST_CASE("intersection") {
  auto r = ring_of({"x", "y"});
  CHECK(same_submodule(intersect(ideal(r, {"x"}), ideal(r, {"y"})), ideal(r, {"x*y"})));
  auto n = ideal(r, {"x^2 + y", "x*y"});
  CHECK(same_submodule(intersect(n, n), n));
  CHECK(same_submodule(intersect(ideal(r, {"x^2"}), ideal(r, {"x^3"})), ideal(r, {"x^3"})));
}

TEST_CASE("colon ideals") {
  auto r = ring_of({"x", "y"});
  CHECK(same_submodule(colon(ideal(r, {"x*y"}), V(r, {"x"})), ideal(r, {"y"})));
  CHECK(same_submodule(colon(ideal(r, {"x*y", "y^2"}), V(r, {"x*y"})), ideal(r, {"1"})));
  auto r2 = ring_of({"x1", "x2"}, {"y1", "y2"});
  auto c = colon(ideal(r2, {"x1*y1 - y2", "x2*y1 - y2"}), V(r2, {"x1 - x2"}));
  CHECK(membership(V(r2, {"y1"}), c));
  CHECK_FALSE(membership(V(r2, {"1"}), c));
  auto mc = module_colon(Submodule(r, 2, {V(r, {"x*y", "0"}), V(r, {"0", "x^2"})}), P(r, "x"));
  CHECK(same_submodule(mc, Submodule(r, 2, {V(r, {"y", "0"}), V(r, {"0", "x"})})));
}

TEST_CASE("saturation") {
  auto r = ring_of({"x"}, {"y1"});
  CHECK(same_submodule(saturate(ideal(r, {"y1*x"}), P(r, "y1")), ideal(r, {"x"})));
  auto n = ideal(r, {"x^2 - y1", "x*y1^2"});
  CHECK(same_submodule(saturate(n, P(r, "1")), n));
  auto r2 = ring_of({"x1", "x2"}, {"y1", "y2"});
  auto s = saturate(ideal(r2, {"x1*y1 - y2", "x2*y1 - y2"}), P(r2, "y1"));
  CHECK(membership(V(r2, {"x1 - x2"}), s));
}

TEST_CASE("Krull dimension") {
  auto r = ring_of({"x", "y"});
  CHECK(krull_dimension(ideal(r, {"x*y"})).as_int() == 1);
  auto r2 = ring_of({"x"}, {"y1", "y2"});
  CHECK(krull_dimension(ideal(r2, {"x*y1 - y2"})).as_int() == 2);
  auto unit = krull_dimension(ideal(r2, {"1"}));
  CHECK(unit.is_empty());
  CHECK(unit.as_int() == -1);
  CHECK(krull_dimension(Submodule(r2, 1)).as_int() == 3);
}

TEST_CASE("resource limits abort the computation") {
  auto r = ring_of({"x", "y", "z"});
  ResourceLimits lim;
  lim.max_degree = 3;
  Engine e(lim);
  CHECK_THROWS_AS(groebner(ideal(r, {"x^2*y - z", "x*y^2 - 1"}), e), ResourceExceeded);
  ResourceLimits quick;
  quick.time_budget = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(groebner(ideal(r, {"x^2*y - z", "x*y^2 - 1"}), Engine(quick)), ResourceExceeded);
  ResourceLimits basis;
  basis.max_basis = 1;
  CHECK_THROWS_AS(groebner(ideal(r, {"x*y - 1", "y*z - 1"}), Engine(basis)), ResourceExceeded);
}

// Random instances: at most 3 variables, degree 3, 4 generators.
TEST_CASE("randomized Groebner invariants") {
  std::mt19937 rng(20241019);
  auto r = ring_of({"x", "y"}, {"z"});
  std::uniform_int_distribution<int> ngens(1, 4);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = ngens(rng); k > 0; --k) gens.push_back(random_poly(rng, r, 3, 3));
    auto n = make_ideal(r, gens);
    GroebnerBasis g = groebner(n);
    ++checked;
    for (const auto& s : s_pair_remainders(g)) CHECK(s.is_zero());
    for (const auto& gen : n.generators) CHECK(normal_form(gen, g).is_zero());
    auto v = FreeModuleVector(random_poly(rng, r, 4, 5));
    auto nf = normal_form(v, g);
    CHECK(normal_form(nf, g) == nf);
    CHECK(membership(v - nf, g));
    // elimination soundness
    auto e = eliminate(n, std::vector<std::size_t>{0});
    for (const auto& x : e.generators) {
      CHECK_FALSE(x.involves_any({0}));
      CHECK(membership(x, g));
    }
    auto eb = groebner(e);
    for (const auto& gen : n.generators)
      if (!gen.involves_any({0})) CHECK(membership(gen, eb));
    // saturation
    auto h = random_poly(rng, r, 1, 2);
    if (h.is_zero()) continue;
    auto s = saturate(n, h);
    CHECK(same_submodule(saturate(s, h), s));
    CHECK(is_contained(n, s));
    CHECK(same_submodule(s, saturate_by_colon(n, h)));
    for (const auto& x : s.generators) {
      bool cleared = false;
      Polynomial hk = P(r, "1");
      for (int k = 0; k <= 12 && !cleared; ++k, hk *= h) cleared = membership(hk * x, g);
      CHECK(cleared);
    }
  }
  CHECK(checked >= 50);
}
