#include "nestcount/bigint.hpp"

#include <vector>

namespace nestcount {

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt multinomial(long n, std::initializer_list<long> parts) {
    long sum = 0;
    for (long p : parts) {
        if (p < 0) return 0;
        sum += p;
    }
    if (sum != n) return 0;
    BigInt r = 1;
    long remaining = n;
    for (long p : parts) {
        r *= binomial(remaining, p);
        remaining -= p;
    }
    return r;
}

std::vector<BigInt> bell_numbers(int n) {
    std::vector<BigInt> bell{1};
    std::vector<BigInt> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next{row.back()};
        next.reserve(row.size() + 1);
        for (const auto& v : row) next.push_back(next.back() + v);
        bell.push_back(next.front());
        row = std::move(next);
    }
    return bell;
}

} // namespace nestcount
