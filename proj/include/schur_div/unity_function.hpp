#pragma once

#include "schur_div/bigint.hpp"
#include "schur_div/errors.hpp"
#include "schur_div/number_theory.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schur_div {

/// Completely multiplicative function into the k-th roots of unity.
///
/// Values are stored as exponents in Z_k: f(n) = exp(2*pi*i * e(n) / k) where
/// e(n) = sum over prime powers q^v || n of v * e(q), reduced mod k. Primes not
/// listed in the assignment take `default_exponent`.
class UnityFunction {
public:
    UnityFunction(std::uint32_t k, std::map<std::uint64_t, std::uint32_t> prime_exponents,
                  std::uint32_t default_exponent = 0)
        : k_(k), prime_exponents_(std::move(prime_exponents)), default_exponent_(default_exponent) {
        if (k_ == 0) throw DomainError("unity function: k must be positive");
        if (default_exponent_ >= k_) throw DomainError("unity function: default exponent must be below k");
        for (const auto& [p, e] : prime_exponents_) {
            require_prime(p);
            if (e >= k_) {
                throw DomainError("unity function: exponent " + std::to_string(e) + " for prime " +
                                  std::to_string(p) + " must be below k");
            }
        }
    }

    /// f identically 1.
    static UnityFunction trivial(std::uint32_t k) { return UnityFunction(k, {}, 0); }

    /// Every prime maps to exponent 1 (the Liouville function when k = 2).
    static UnityFunction liouville_type(std::uint32_t k = 2) { return UnityFunction(k, {}, 1 % k); }

    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t default_exponent() const noexcept { return default_exponent_; }
    const std::map<std::uint64_t, std::uint32_t>& prime_exponents() const noexcept { return prime_exponents_; }

    std::uint32_t exponent_of_prime(std::uint64_t p) const {
        auto it = prime_exponents_.find(p);
        return it == prime_exponents_.end() ? default_exponent_ : it->second;
    }

    std::uint32_t evaluate(std::uint64_t n) const { return evaluate(Natural(n)); }

    /// Throws BudgetExceeded when n cannot be factored with the shared prime table.
    std::uint32_t evaluate(const Natural& n) const {
        if (n < 1) throw DomainError("unity function: argument must be positive");
        std::uint64_t total = 0;
        for (const auto& [q, v] : PrimeTable::shared().factorize(n)) {
            std::uint32_t e;
            if (auto small = to_u64(q)) {
                e = exponent_of_prime(*small);
            } else {
                e = default_exponent_;
            }
            total = (total + static_cast<std::uint64_t>(v % k_) * e) % k_;
        }
        return static_cast<std::uint32_t>(total);
    }

    bool operator==(const UnityFunction&) const = default;

private:
    std::uint32_t k_;
    std::map<std::uint64_t, std::uint32_t> prime_exponents_;
    std::uint32_t default_exponent_;
};

}  // namespace schur_div
