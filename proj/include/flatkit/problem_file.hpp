#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flatkit/flatness.hpp"

namespace flatkit {

struct SourceLocation {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLocation loc, const std::string& what);
  SourceLocation location() const noexcept { return loc_; }

 private:
  SourceLocation loc_;
};

class SemanticError : public std::runtime_error {
 public:
  SemanticError(SourceLocation loc, const std::string& what);
  SourceLocation location() const noexcept { return loc_; }

 private:
  SourceLocation loc_;
};

enum class ExpectedVerdict { Flat, NotFlat };

struct Expectation {
  ExpectedVerdict verdict = ExpectedVerdict::Flat;
  /// Set when the file records it; the inner nullopt means "none <= n".
  std::optional<std::optional<unsigned>> first_torsion_power;
};

struct OracleSection {
  unsigned degree = 1;
  std::optional<unsigned> multiplier_degree;
};

/// Generators of a candidate component of a fibred power, kept as source
/// text until the power (and hence the variable names) is known.
struct ComponentSection {
  std::string label;
  std::string source;
  SourceLocation location;
};

/// A parsed problem file:
///
///   # comment
///   base y1 y2;
///   fiber x;
///   ideal: x*y1 - y2;
///   module 2: [y2, -y1];
///   point origin = (0, 0);
///   expect: notflat first_torsion 2;
///   oracle: degree = 2, multiplier_degree = 4;
///   component exceptional: y1, y2;
///
/// Statements end with ';' (optional for the last one). Declarations (base,
/// fiber) must come before anything that uses variables.
struct ProblemFile {
  std::vector<std::string> base;
  std::vector<std::string> fiber;
  std::vector<Polynomial> ideal;
  std::optional<ModuleSpec> module;
  std::vector<std::pair<std::string, std::vector<Rational>>> points;
  std::optional<Expectation> expect;
  std::optional<OracleSection> oracle;
  std::vector<ComponentSection> components;
  RingTower algebra{std::vector<std::string>{}, std::vector<std::string>{}};

  FlatnessProblem problem() const;
  const std::vector<Rational>& point(const std::string& name) const;
};

ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::filesystem::path& path);

/// Expression grammar shared with the problem file: rational/integer
/// constants, identifiers, + - * / ^ and parentheses; '^' binds tightest and
/// takes a non-negative integer; '/' only by a nonzero constant; implicit
/// multiplication is rejected.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              SourceLocation origin = {});

}  // namespace flatkit
