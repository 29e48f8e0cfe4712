#pragma once

#include <susa/rational.hpp>

#include <string>
#include <vector>

namespace susa {

/// A sexagesimal literal in absolute notation, split into digit groups.
///
/// "1,41,40,25" is 1*60^3 + 41*60^2 + 40*60 + 25; the ";" marks the
/// fraction point, so "2;15" is 2 + 15/60. Every group lies in 0..59.
/// `canonical` records whether the source text is exactly what
/// format_numeral would produce for the same value.
struct Numeral {
    std::vector<int> integer_digits;
    std::vector<int> fraction_digits;
    bool canonical = true;

    Rational value() const;
};

/// Parses the grammar  group ("," group)* (";" group ("," group)*)?
/// with group = 1-2 decimal digits of value <= 59.
Numeral parse_numeral_parts(const std::string& text);

/// Positional value of a sexagesimal literal.
Rational parse_numeral(const std::string& text);

/// Canonical absolute rendering. Requires value >= 0 with a 60-smooth
/// denominator. Integers render without ";" by default ("35,0"); passing
/// false appends an explicit zero fraction group ("35,0;0"). Either way
/// the text reparses to the identical value.
std::string format_numeral(const Rational& value, bool no_semicolon_integer_style = true);

/// Numeral text when the value is renderable, "n/m" fallback otherwise.
/// Negative values render as "-" plus the rendering of their magnitude.
std::string format_value(const Rational& value);

/// Accepts either a sexagesimal numeral or a fraction "n/m".
Rational parse_value(const std::string& text);

} // namespace susa
