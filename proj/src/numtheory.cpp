#include "susa/numtheory.hpp"

#include <algorithm>

namespace susa {

std::string Factorization::to_string() const {
    if (factors.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i)
            out += " * ";
        out += factors[i].first.str();
        if (factors[i].second != 1)
            out += "^" + std::to_string(factors[i].second);
    }
    return out;
}

Factorization factor(const BigInt& n) {
    if (n <= 0)
        throw Error(ErrorCode::NonPositive, "cannot factor " + n.str());
    if (n > kFactorBudget)
        throw Error(ErrorCode::OutOfBudget,
                    n.str() + " exceeds the trial-division budget of 10^15");

    Factorization result;
    result.value = n;
    std::uint64_t m = static_cast<std::uint64_t>(n);

    auto strip = [&](std::uint64_t p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e)
            result.factors.emplace_back(BigInt(p), e);
    };

    strip(2);
    strip(3);
    strip(5);

    // 2-3-5 wheel: candidate increments cycling over residues coprime to 30.
    static constexpr std::uint64_t wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::uint64_t p = 7;
    std::size_t w = 0;
    while (p * p <= m) {
        strip(p);
        p += wheel[w];
        w = (w + 1) % 8;
    }
    if (m > 1)
        result.factors.emplace_back(BigInt(m), 1);
    return result;
}

bool is_regular(const BigInt& n) {
    if (n <= 0)
        throw Error(ErrorCode::NonPositive, "regularity is defined for n >= 1");
    BigInt m = n;
    while (m % 2 == 0) m /= 2;
    while (m % 3 == 0) m /= 3;
    while (m % 5 == 0) m /= 5;
    return m == 1;
}

namespace {

BigInt sqrt_by_factoring(const BigInt& n) {
    if (n == 0 || n == 1)
        return n;
    Factorization f = factor(n);
    BigInt root = 1;
    for (const auto& [p, e] : f.factors) {
        if (e % 2 != 0)
            throw Error(ErrorCode::NotPerfectSquare,
                        n.str() + " is not a perfect square (odd exponent of " +
                            p.str() + ")");
        for (int i = 0; i < e / 2; ++i)
            root *= p;
    }
    return root;
}

} // namespace

ExactNumber sqrt_exact(const ExactNumber& v) {
    if (v.is_negative())
        throw Error(ErrorCode::NegativeInput,
                    "square root of negative value " + v.to_string());
    if (v.is_zero())
        return ExactNumber(0);
    return ExactNumber(sqrt_by_factoring(v.numerator()),
                       sqrt_by_factoring(v.denominator()));
}

ExactNumber reciprocal(const ExactNumber& v) {
    if (v.is_zero())
        throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
    return ExactNumber(1) / v;
}

std::vector<std::pair<BigInt, ExactNumber>> reciprocal_table(std::uint64_t limit) {
    // Regular numbers up to 10^6 are sparse; enumerate 2^a 3^b 5^c directly.
    std::vector<BigInt> regulars;
    for (BigInt p2 = 1; p2 <= limit; p2 *= 2)
        for (BigInt p3 = p2; p3 <= limit; p3 *= 3)
            for (BigInt p5 = p3; p5 <= limit; p5 *= 5)
                regulars.push_back(p5);
    std::sort(regulars.begin(), regulars.end());

    std::vector<std::pair<BigInt, ExactNumber>> table;
    table.reserve(regulars.size());
    for (const BigInt& n : regulars)
        table.emplace_back(n, reciprocal(ExactNumber(n)));
    return table;
}

} // namespace susa
