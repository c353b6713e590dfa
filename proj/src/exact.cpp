#include "susa/exact.hpp"

namespace susa {

ExactNumber ExactNumber::from_string(const std::string& text) {
    if (text.empty())
        throw Error(ErrorCode::EmptyInput, "empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return ExactNumber(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        return ExactNumber(num, den);
    } catch (const std::runtime_error& e) {
        throw Error(ErrorCode::BadData, "bad rational literal '" + text + "'");
    }
}

std::string ExactNumber::to_string() const {
    std::string s = numerator().str();
    if (denominator() != 1)
        s += "/" + denominator().str();
    return s;
}

ExactNumber pow(const ExactNumber& base, long long exponent) {
    if (exponent < 0) {
        if (base.is_zero())
            throw Error(ErrorCode::DivisionByZero, "zero to a negative power");
        return pow(ExactNumber(1) / base, -exponent);
    }
    ExactNumber result(1);
    ExactNumber b = base;
    long long e = exponent;
    while (e > 0) {
        if (e & 1)
            result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

} // namespace susa
