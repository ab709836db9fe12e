#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropcomm {

using Rational = mpq_class;

/// Parses an exact rational from "3", "-2", "4.10", "41/10" or "-0.5".
/// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Lowest-terms fraction, e.g. "41/10", "3", "-1/2".
std::string to_fraction_string(const Rational& q);

/// Decimal notation when the value has at most two fractional digits
/// ("4.1", "2.31", "-3"), fraction notation otherwise.
std::string to_display_string(const Rational& q);

}  // namespace tropcomm
