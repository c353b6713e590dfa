#include "susa/sexagesimal.hpp"

#include <cctype>

namespace susa {

namespace {

std::vector<int> parse_groups(std::string_view part, std::string_view whole) {
    std::vector<int> digits;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = part.find(',', pos);
        std::string_view group = part.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (group.empty())
            throw Error(ErrorCode::MalformedSeparator,
                        "empty digit group in '" + std::string(whole) + "'");
        if (group.size() > 2)
            throw Error(ErrorCode::DigitOutOfRange,
                        "digit group '" + std::string(group) + "' is not below 60");
        int value = 0;
        for (char c : group) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error(ErrorCode::MalformedSeparator,
                            "unexpected character '" + std::string(1, c) + "' in numeral");
            value = value * 10 + (c - '0');
        }
        if (value >= 60)
            throw Error(ErrorCode::DigitOutOfRange,
                        "digit group " + std::to_string(value) + " is not a base-60 digit");
        digits.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return digits;
}

void strip_leading_zeros(std::vector<int>& digits) {
    std::size_t keep = 0;
    while (keep + 1 < digits.size() && digits[keep] == 0)
        ++keep;
    digits.erase(digits.begin(), digits.begin() + keep);
}

void strip_trailing_zeros(std::vector<int>& digits) {
    while (!digits.empty() && digits.back() == 0)
        digits.pop_back();
}

BigInt digits_as_integer(const std::vector<int>& digits) {
    BigInt n = 0;
    for (int d : digits)
        n = n * 60 + d;
    return n;
}

} // namespace

Numeral parse_numeral(std::string_view text) {
    if (text.empty())
        throw Error(ErrorCode::EmptyInput, "empty numeral");

    int sign = 1;
    if (text.front() == '-') {
        sign = -1;
        text.remove_prefix(1);
        if (text.empty())
            throw Error(ErrorCode::EmptyInput, "numeral with only a sign");
    }

    std::size_t semi = text.find(';');
    if (semi != std::string_view::npos &&
        text.find(';', semi + 1) != std::string_view::npos)
        throw Error(ErrorCode::MalformedSeparator,
                    "more than one ';' in '" + std::string(text) + "'");

    if (semi == std::string_view::npos) {
        FloatingNumeral numeral{sign, parse_groups(text, text)};
        strip_leading_zeros(numeral.digits);
        if (numeral.digits == std::vector<int>{0})
            numeral.sign = 1;
        return numeral;
    }

    SexagesimalForm form;
    form.sign = sign;
    form.integer_digits = parse_groups(text.substr(0, semi), text);
    form.fractional_digits = parse_groups(text.substr(semi + 1), text);
    strip_leading_zeros(form.integer_digits);
    strip_trailing_zeros(form.fractional_digits);
    if (form.integer_digits == std::vector<int>{0} && form.fractional_digits.empty() &&
        form.sign < 0)
        form.sign = 1;
    return form;
}

ExactNumber to_exact(const SexagesimalForm& form) {
    ExactNumber value(digits_as_integer(form.integer_digits));
    ExactNumber place(1, 60);
    for (int d : form.fractional_digits) {
        value += ExactNumber(d) * place;
        place = place * ExactNumber(1, 60);
    }
    if (form.sign < 0)
        value = -value;
    return value;
}

ExactNumber anchor(const FloatingNumeral& numeral, int exponent_of_last_digit) {
    ExactNumber v = ExactNumber(digits_as_integer(numeral.digits)) *
                    pow(ExactNumber(60), exponent_of_last_digit);
    return numeral.sign < 0 ? -v : v;
}

SexagesimalForm to_sexagesimal(const ExactNumber& value) {
    SexagesimalForm form;
    ExactNumber v = value;
    if (v.is_negative()) {
        form.sign = -1;
        v = -v;
    }

    // The fractional part terminates iff the denominator divides some 60^k.
    BigInt den = v.denominator();
    int frac_places = 0;
    {
        BigInt d = den;
        while (d % 2 == 0) d /= 2;
        while (d % 3 == 0) d /= 3;
        while (d % 5 == 0) d /= 5;
        if (d != 1)
            throw Error(ErrorCode::NonTerminating,
                        "denominator " + den.str() +
                            " has a prime factor other than 2, 3, 5");
        BigInt scale = 1;
        while (scale % den != 0) {
            scale *= 60;
            ++frac_places;
        }
    }

    BigInt integer_part = v.numerator() / den;
    BigInt remainder = v.numerator() % den;

    if (integer_part == 0) {
        form.integer_digits = {0};
    } else {
        BigInt n = integer_part;
        while (n > 0) {
            form.integer_digits.insert(form.integer_digits.begin(),
                                       static_cast<int>(n % 60));
            n /= 60;
        }
    }

    // remainder/den scaled to frac_places base-60 digits.
    BigInt frac = remainder;
    for (int i = 0; i < frac_places; ++i)
        frac *= 60;
    frac /= den;
    std::vector<int> frac_digits(frac_places, 0);
    for (int i = frac_places - 1; i >= 0; --i) {
        frac_digits[i] = static_cast<int>(frac % 60);
        frac /= 60;
    }
    while (!frac_digits.empty() && frac_digits.back() == 0)
        frac_digits.pop_back();
    form.fractional_digits = std::move(frac_digits);
    return form;
}

std::string format_sexagesimal(const ExactNumber& value) {
    return to_text(to_sexagesimal(value));
}

std::string to_text(const SexagesimalForm& form) {
    std::string out;
    if (form.sign < 0)
        out += '-';
    for (std::size_t i = 0; i < form.integer_digits.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(form.integer_digits[i]);
    }
    if (!form.fractional_digits.empty()) {
        out += ';';
        for (std::size_t i = 0; i < form.fractional_digits.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(form.fractional_digits[i]);
        }
    }
    return out;
}

std::string to_text(const FloatingNumeral& numeral) {
    std::string out;
    if (numeral.sign < 0)
        out += '-';
    for (std::size_t i = 0; i < numeral.digits.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(numeral.digits[i]);
    }
    return out;
}

ExactNumber numeral_value(std::string_view text, int anchor_exponent) {
    Numeral n = parse_numeral(text);
    if (auto* form = std::get_if<SexagesimalForm>(&n))
        return to_exact(*form);
    return anchor(std::get<FloatingNumeral>(n), anchor_exponent);
}

} // namespace susa
