#ifndef SUSA_SEXAGESIMAL_HPP
#define SUSA_SEXAGESIMAL_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "susa/exact.hpp"

namespace susa {

/// Anchored base-60 numeral in the conventional "0;6,40" notation. The semicolon
/// fixes the absolute scale.
struct SexagesimalForm {
    int sign = 1; // +1 or -1
    std::vector<int> integer_digits;    // most significant first, no leading 0 unless just {0}
    std::vector<int> fractional_digits; // no trailing 0
};

/// Place-value-free numeral: a comma-only digit string such as "4,41,40".
/// Denotes the class {D * 60^k : k in Z}; an anchor exponent picks a member.
struct FloatingNumeral {
    int sign = 1; // +1 or -1
    std::vector<int> digits; // nonempty, first digit nonzero unless just {0}
};

using Numeral = std::variant<SexagesimalForm, FloatingNumeral>;

/// Grammar: '-'? group (',' group)* (';' group (',' group)*)?  with each
/// group a 1-2 digit decimal number below 60. A ';' makes the numeral
/// anchored; otherwise it is floating.
Numeral parse_numeral(std::string_view text);

ExactNumber to_exact(const SexagesimalForm& form);

/// Reads the digit string as a base-60 integer and scales it so the last
/// digit sits at the given power of 60.
ExactNumber anchor(const FloatingNumeral& numeral, int exponent_of_last_digit);

/// Fails with NonTerminating unless the denominator is 2-3-5-smooth.
SexagesimalForm to_sexagesimal(const ExactNumber& value);
std::string format_sexagesimal(const ExactNumber& value);

std::string to_text(const SexagesimalForm& form);
std::string to_text(const FloatingNumeral& numeral);

/// Convenience: parse text and produce a value, anchoring floating numerals
/// at the given exponent of the last digit.
ExactNumber numeral_value(std::string_view text, int anchor_exponent = 0);

} // namespace susa

#endif
