#ifndef SUSA_NUMTHEORY_HPP
#define SUSA_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "susa/exact.hpp"

namespace susa {

/// Prime-exponent decomposition of a positive integer. Primes are strictly
/// increasing; an empty list means 1.
struct Factorization {
    std::vector<std::pair<BigInt, int>> factors;
    BigInt value;

    std::string to_string() const; // "2^14 * 5^8 * 41^2"
};

inline constexpr std::int64_t kFactorBudget = 1'000'000'000'000'000; // 10^15

/// Trial division with a 2-3-5 wheel. Hard budget of 10^15.
Factorization factor(const BigInt& n);

/// True iff n has no prime factor other than 2, 3, 5. These are exactly the
/// numbers with finite sexagesimal reciprocals.
bool is_regular(const BigInt& n);

/// Exact square root by factoring numerator and denominator and halving all
/// exponents. No floating point anywhere.
ExactNumber sqrt_exact(const ExactNumber& v);

/// 1/v. Exact for irregular v too; regularity only affects printability.
ExactNumber reciprocal(const ExactNumber& v);

/// All regular n in 1..limit, ascending, with their exact reciprocals.
std::vector<std::pair<BigInt, ExactNumber>> reciprocal_table(std::uint64_t limit);

} // namespace susa

#endif
