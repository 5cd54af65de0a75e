#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gcon {

/// Exact rational numbers; all stability arithmetic goes through this type.
using Rational = mpq_class;

/// Accepts "n" or "p/q" (optional leading '-', q > 0). The result is
/// canonicalized, so "4/2" parses to 2.
Rational parse_rational(std::string_view text);

/// Canonical text form: "-4", "2/3".
std::string format_rational(const Rational& value);

}  // namespace gcon
