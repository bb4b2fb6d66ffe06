#pragma once

#include "schur_div/coloring.hpp"
#include "schur_div/errors.hpp"
#include "schur_div/ramsey.hpp"
#include "schur_div/unity_function.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace schur_div {

/// Least a <= search_bound with f(a) = f(a+1) = 1, if any.
inline std::optional<std::uint64_t> min_consecutive_ones(const UnityFunction& f, std::uint64_t search_bound) {
    std::uint32_t prev = f.evaluate(std::uint64_t{1});
    for (std::uint64_t a = 1; a <= search_bound; ++a) {
        const std::uint32_t next = f.evaluate(a + 1);
        if (prev == 0 && next == 0) return a;
        prev = next;
    }
    return std::nullopt;
}

/// Raised when a claimed restricted Schur bound fails to produce a witness.
class BoundViolation : public Error {
public:
    using Error::Error;
};

struct Theorem6Record {
    std::uint64_t x = 0, y = 0, z = 0;
    std::uint64_t a = 0;          // y / x; f(a) = f(a+1) = 1
    std::uint64_t minimal_a = 0;  // min_consecutive_ones, never larger than a
    Color color = 0;
};

/// Finds x + y = z, x | y with f(x) = f(y) = f(z) inside {1..s_prime} and
/// divides by x: a = y/x and a + 1 = z/x both have f = 1 by multiplicativity.
inline Theorem6Record verify_theorem6_bound(const UnityFunction& f, std::uint64_t s_prime) {
    const auto w = direct_schur_div_search(unity_coloring(f), s_prime);
    if (!w) {
        throw BoundViolation("no monochromatic x + y = z with x | y in 1.." + std::to_string(s_prime) +
                             " for a " + std::to_string(f.k()) + "-valued unity function; " +
                             std::to_string(s_prime) + " is not a valid restricted Schur bound");
    }
    Theorem6Record rec;
    rec.x = std::get<Natural>(w->x).convert_to<std::uint64_t>();
    rec.y = std::get<Natural>(w->y).convert_to<std::uint64_t>();
    rec.z = std::get<Natural>(w->z).convert_to<std::uint64_t>();
    rec.a = rec.y / rec.x;
    rec.color = w->color;
    if (f.evaluate(rec.a) != 0 || f.evaluate(rec.a + 1) != 0 || rec.a > s_prime) {
        throw BoundViolation("quotient a = " + std::to_string(rec.a) + " fails f(a) = f(a+1) = 1");
    }
    const auto minimal = min_consecutive_ones(f, rec.a);
    if (!minimal) throw BoundViolation("min_consecutive_ones disagrees with the witness quotient");
    rec.minimal_a = *minimal;
    return rec;
}

}  // namespace schur_div
