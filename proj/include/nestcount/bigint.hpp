#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nestcount {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an engine detects that an identity guaranteed by the
/// mathematics does not hold (nonzero remainder, surviving Laurent term, ...).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when an exhaustive routine is asked for a size above its guard.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt binomial(long n, long k);

/// multinomial(n; parts...) is zero when a part is negative or the parts do
/// not sum to n.
BigInt multinomial(long n, std::initializer_list<long> parts);

/// Bell numbers B_0..B_n via the Bell triangle.
std::vector<BigInt> bell_numbers(int n);

} // namespace nestcount
