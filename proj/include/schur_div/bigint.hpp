#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace schur_div {

/// Arbitrary-precision natural number.
using Natural = boost::multiprecision::mpz_int;

inline std::string to_decimal(const Natural& n) { return n.str(); }

// May overestimate by one, which is fine for budget checks.
inline std::size_t decimal_digits(const Natural& n) {
    return mpz_sizeinbase(n.backend().data(), 10);
}

inline std::optional<std::uint64_t> to_u64(const Natural& n) {
    if (n < 0 || n > Natural(UINT64_MAX)) return std::nullopt;
    return n.convert_to<std::uint64_t>();
}

inline std::uint64_t mod_u64(const Natural& n, std::uint64_t m) {
    return Natural(n % m).convert_to<std::uint64_t>();
}

}  // namespace schur_div
