#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flatkit {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" (optional leading minus). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace flatkit
