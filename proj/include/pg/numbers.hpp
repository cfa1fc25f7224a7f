#ifndef PG_NUMBERS_HPP
#define PG_NUMBERS_HPP

#include <optional>
#include <utility>

namespace pg {

constexpr bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// n = p^k with p prime and k >= 1, or nullopt.
constexpr std::optional<std::pair<long long, int>> prime_power(long long n) {
    if (n < 2) return std::nullopt;
    long long p = n;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    if (n != 1) return std::nullopt;
    return std::make_pair(p, k);
}

constexpr long long ipow(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace pg

#endif
