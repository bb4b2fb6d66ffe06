#pragma once

#include "schur_div/bigint.hpp"
#include "schur_div/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace schur_div {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

/// Primes in [2, limit] by the sieve of Eratosthenes.
inline std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

inline std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

/// Primes in [lo, hi] by sieving one segment with the base primes up to sqrt(hi).
inline std::vector<std::uint64_t> primes_in_segment(std::uint64_t lo, std::uint64_t hi,
                                                    const std::vector<std::uint32_t>& base) {
    std::vector<std::uint64_t> out;
    if (hi < 2 || lo > hi) return out;
    lo = std::max<std::uint64_t>(lo, 2);
    std::vector<bool> composite(hi - lo + 1, false);
    for (std::uint64_t p : base) {
        if (p * p > hi) break;
        std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        for (std::uint64_t j = start; j <= hi; j += p) composite[j - lo] = true;
    }
    for (std::uint64_t n = lo; n <= hi; ++n) {
        if (!composite[n - lo]) out.push_back(n);
    }
    return out;
}

/// Base primes large enough to sieve any segment ending at or below `hi`.
inline std::vector<std::uint32_t> sieving_primes_for(std::uint64_t hi) {
    return primes_up_to(static_cast<std::uint32_t>(isqrt(hi) + 1));
}

/// Trial-division prime table; default bound 10^6 factors anything below 10^12.
class PrimeTable {
public:
    explicit PrimeTable(std::uint32_t bound = 1'000'000) : bound_(bound), primes_(primes_up_to(bound)) {}

    std::uint32_t bound() const noexcept { return bound_; }
    const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

    static const PrimeTable& shared() {
        static const PrimeTable table;
        return table;
    }

    /// Prime factorization as (prime, multiplicity) pairs in ascending order.
    /// Throws BudgetExceeded when a cofactor above bound^2 survives trial division.
    std::vector<std::pair<Natural, unsigned>> factorize(Natural n) const {
        if (n < 1) throw DomainError("factorize: argument must be positive");
        std::vector<std::pair<Natural, unsigned>> factors;
        for (std::uint32_t p : primes_) {
            if (Natural(p) * p > n) break;
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            if (e > 0) factors.emplace_back(Natural(p), e);
        }
        if (n > 1) {
            const Natural limit = Natural(bound_) * bound_;
            if (n > limit) {
                throw BudgetExceeded("factorization budget exceeded: cofactor with " +
                                         std::to_string(decimal_digits(n)) +
                                         " digits has no prime factor up to " + std::to_string(bound_),
                                     0);
            }
            factors.emplace_back(n, 1);
        }
        return factors;
    }

private:
    std::uint32_t bound_;
    std::vector<std::uint32_t> primes_;
};

}  // namespace schur_div
