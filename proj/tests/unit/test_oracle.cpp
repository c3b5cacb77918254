#include <doctest.h>

#include "flatkit/cli.hpp"
#include "support.hpp"

using namespace flatkit;
using namespace flatkit::test;

namespace {

ModulePresentation blowup_square() {
  return tensor_power(ModulePresentation::algebra(tower({"y1", "y2"}, {"x"}, {"x*y1 - y2"})), 2);
}

SearchBounds bounds(unsigned d, unsigned e) {
  SearchBounds b;
  b.witness_degree = d;
  b.multiplier_degree = e;
  return b;
}

}  // namespace

TEST_CASE("oracle finds the blowup witness") {
  auto sq = blowup_square();
  auto w = brute_torsion_search(sq, bounds(1, 2));
  REQUIRE(w);
  const auto& r = sq.ring();
  CHECK(w->element == V(r, {"x1 - x2"}));
  CHECK(w->annihilator == P(r, "y1"));
  CHECK(check_combination(sq, *w));
  CHECK(verify_certificate(sq, TorsionCertificate{w->element, w->annihilator}));
  // the linear combination is g1 - g2
  REQUIRE(w->combination.size() == 2);
  CHECK(w->combination[0].coefficient == -w->combination[1].coefficient);
}

TEST_CASE("oracle in evaluation mode") {
  auto sq = blowup_square();
  auto b = bounds(1, 2);
  // x1 = 1, x2 = 0, y = 0 lies on every relation and separates x1 - x2 from 0
  b.evaluation_point = std::vector<Rational>{1, 0, 0, 0};
  auto w = brute_torsion_search(sq, b);
  REQUIRE(w);
  CHECK(check_combination(sq, *w));
  b.evaluation_point = std::vector<Rational>{1, 1, 1, 0};
  CHECK_THROWS_AS(brute_torsion_search(sq, b), std::invalid_argument);
}

TEST_CASE("oracle finds nothing on free modules") {
  auto t = tower({"y1", "y2"}, {"x"});
  CHECK_FALSE(brute_torsion_search(ModulePresentation::free(t, 2), bounds(2, 3)));
  CHECK_FALSE(brute_torsion_search(tensor_power(ModulePresentation::algebra(t), 2), bounds(3, 3)));
}

TEST_CASE("oracle on R/(y1)") {
  auto t = tower({"y1", "y2"}, {});
  ModulePresentation q(t, 1, {V(t.ring(), {"y1"})});
  auto w = brute_torsion_search(q, bounds(1, 1));
  REQUIRE(w);
  CHECK(w->element == V(t.ring(), {"1"}));
  CHECK(w->annihilator == P(t.ring(), "y1"));
}

TEST_CASE("oracle: ideal module torsion-free at power 1, witness at power 2") {
  auto t = tower({"y1", "y2"}, {});
  ModulePresentation m(t, 2, {V(t.ring(), {"y2", "-y1"})});
  CHECK_FALSE(brute_torsion_search(m, bounds(4, 5)));
  auto w = brute_torsion_search(tensor_power(m, 2), bounds(2, 4));
  REQUIRE(w);
  CHECK(check_combination(tensor_power(m, 2), *w));
}

TEST_CASE("oracle budget") {
  auto t = tower({"y1", "y2", "y3"}, {"x", "z"}, {"x*y1 - y2*z"});
  auto b = bounds(6, 8);
  b.budget = std::chrono::milliseconds(1);
  CHECK_THROWS_AS(brute_torsion_search(tensor_power(ModulePresentation::algebra(t), 2), b), BudgetExceeded);
}

TEST_CASE("annihilator candidates") {
  auto t = tower({"y1", "y2"}, {"x"});
  auto c = annihilator_candidates(t, 1);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == P(t.ring(), "y1"));
  CHECK(c[1] == P(t.ring(), "y2"));
  CHECK(SearchBounds::recommended(blowup_square(), 2).multiplier_degree == 4);
}

TEST_CASE("cross-validation of the shipped corpus") {
  auto entries = cli::load_corpus(FLATKIT_CORPUS_DIR);
  CHECK(entries.size() == 8);
  auto report = cross_validate(entries, 2);
  REQUIRE(report.size() == entries.size());
  for (const auto& r : report) {
    CAPTURE(r.trace);
    CHECK(r.agree);
  }
}

TEST_CASE("negative control: corrupted expectations are flagged") {
  auto entries = cli::load_corpus(FLATKIT_CORPUS_DIR);
  for (auto& e : entries)
    if (e.expected) e.expected = *e.expected == FlatnessStatus::Flat ? FlatnessStatus::NotFlat : FlatnessStatus::Flat;
  auto report = cross_validate(entries);
  for (const auto& r : report) {
    CHECK_FALSE(r.agree);
    CHECK(r.trace.find("MISMATCH expected") != std::string::npos);
  }
  CHECK(cross_validate({}).empty());
}

TEST_CASE("engine not-flat without oracle witness triggers a retry") {
  auto entries = cli::load_corpus(FLATKIT_CORPUS_DIR);
  for (auto& e : entries) {
    if (e.name != "blowup") continue;
    e.bounds = bounds(0, 0);
    auto rep = cross_validate({e});
    CHECK(rep[0].trace.find("retrying") != std::string::npos);
    CHECK(rep[0].bounds_used.witness_degree == 1);
    CHECK(rep[0].agree);
  }
}
