/**
 * Exact rational scalars (GMP) and their text forms.
 */
#ifndef DMORSE_RATIONAL_HPP
#define DMORSE_RATIONAL_HPP

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dmorse {

using Rational = mpq_class;

/**
 * Parse "p/q", an integer, or a plain decimal such as "2.125".  Signs are
 * accepted; callers that need nonnegative values check separately.
 * Returns std::nullopt on malformed input or a zero denominator.
 */
std::optional<Rational> parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}   // namespace dmorse

#endif
