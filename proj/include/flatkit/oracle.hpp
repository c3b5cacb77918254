#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatkit/flatness.hpp"

namespace flatkit {

/// Degree bounds of the brute-force torsion search: witnesses m of degree
/// <= witness_degree, annihilators r of degree <= witness_degree, and r*m
/// tested against the span of monomial multiples of relations of degree <=
/// multiplier_degree.
struct SearchBounds {
  unsigned witness_degree = 1;
  unsigned multiplier_degree = 2;
  std::chrono::milliseconds budget{60000};
  /// If set, non-membership m ∉ N is shown by m(point) != 0 at a point (one
  /// value per ring variable) where every relation vanishes, instead of by a
  /// Groebner normal form.
  std::optional<std::vector<Rational>> evaluation_point;

  /// multiplier_degree = witness_degree + largest relation degree.
  static SearchBounds recommended(const ModulePresentation& m, unsigned witness_degree);
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MultiplierTerm {
  Monomial multiplier;
  std::size_t relation;
  Rational coefficient;
};

/// r*m = Σ coefficient * multiplier * relations[relation], with m ∉ N.
struct OracleWitness {
  FreeModuleVector element;
  Polynomial annihilator;
  std::vector<MultiplierTerm> combination;
};

/// Candidate annihilators tried in order: base monomials of degree 1..D
/// (descending grevlex within a degree), then y_i ± y_j.
std::vector<Polynomial> annihilator_candidates(const RingTower& tower, unsigned max_degree);

/// Exhaustive exact-linear-algebra search. Any returned witness is sound;
/// nullopt only means "no witness within the bounds". Throws BudgetExceeded.
std::optional<OracleWitness> brute_torsion_search(const ModulePresentation& m,
                                                  const SearchBounds& bounds);

/// Recomputes Σ coefficient*multiplier*relation and compares with r*m.
bool check_combination(const ModulePresentation& m, const OracleWitness& w);

/// One problem of a verification corpus.
struct CorpusEntry {
  std::string name;
  FlatnessProblem problem;
  std::optional<FlatnessStatus> expected;
  /// Outer nullopt: not recorded; inner nullopt: no torsion up to n.
  std::optional<std::optional<unsigned>> expected_first_torsion;
  SearchBounds bounds;
  ResourceLimits limits;
};

struct CrossValidationRecord {
  std::string name;
  FlatnessStatus engine_status = FlatnessStatus::Inconclusive;
  std::optional<FlatnessStatus> expected;
  bool oracle_found = false;
  SearchBounds bounds_used;
  bool agree = false;
  std::string engine_certificate;  // "(element, annihilator)" when not flat
  std::string oracle_witness;
  std::string trace;
};

/// Engine verdict vs oracle search on F^{⊗n} for every entry. An engine
/// NotFlat without an oracle witness triggers one retry at larger bounds
/// before it is reported. Runs up to `jobs` entries concurrently.
std::vector<CrossValidationRecord> cross_validate(const std::vector<CorpusEntry>& corpus,
                                                  unsigned jobs = 1);

}  // namespace flatkit
