#pragma once

#include "schur_div/coloring.hpp"
#include "schur_div/errors.hpp"
#include "schur_div/number_theory.hpp"
#include "schur_div/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

namespace schur_div {

/// Whether 0 < r < p is a k-th power mod p: r^((p-1)/gcd(k, p-1)) == 1.
inline bool is_kth_residue(std::uint64_t r, std::uint64_t p, std::uint64_t k) {
    require_prime(p);
    if (r == 0 || r >= p) throw DomainError("residue " + std::to_string(r) + " outside 1.." + std::to_string(p - 1));
    if (k == 0) throw DomainError("k must be positive");
    const std::uint64_t d = std::gcd(k, p - 1);
    return powmod(r, (p - 1) / d, p) == 1;
}

namespace detail {

// Assumes p prime, k >= 1, m >= 1.
inline std::optional<std::uint64_t> run_start_unchecked(std::uint64_t p, std::uint64_t k, std::uint64_t m) {
    const std::uint64_t e = (p - 1) / std::gcd(k, p - 1);
    std::uint64_t run = 0;
    for (std::uint64_t r = 1; r < p; ++r) {
        run = powmod(r, e, p) == 1 ? run + 1 : 0;
        if (run == m) return r - m + 1;
    }
    return std::nullopt;
}

}  // namespace detail

/// r(k, m, p): least r >= 1 with r, ..., r+m-1 all k-th power residues and r+m-1 < p.
/// nullopt marks p as exceptional.
inline std::optional<std::uint64_t> residue_run_start(std::uint64_t p, std::uint64_t k, std::uint64_t m) {
    require_prime(p);
    if (k == 0 || m == 0) throw DomainError("k and m must be positive");
    return detail::run_start_unchecked(p, k, m);
}

struct ResidueReport {
    std::uint64_t p = 0, k = 0, m = 0;
    std::optional<std::uint64_t> r;

    bool exceptional() const noexcept { return !r.has_value(); }
    bool operator==(const ResidueReport&) const = default;
};

/// Empirical Lambda(k, m) over a prime range.
struct LambdaEstimate {
    std::uint64_t k = 0, m = 0, p_min = 0, p_max = 0;
    std::optional<std::uint64_t> max_r;
    std::optional<std::uint64_t> argmax_p;  // smallest prime attaining max_r
    std::vector<std::uint64_t> exceptional;
    std::uint64_t primes_scanned = 0;
};

struct ScanResult {
    std::vector<ResidueReport> reports;  // ascending p
    LambdaEstimate estimate;
};

inline constexpr std::uint64_t scan_block_size = std::uint64_t{1} << 16;

/// One report per prime in [p_min, p_max]. Blocks of the range are sieved and
/// scanned in parallel; output order is always ascending p.
inline ScanResult scan_primes(std::uint64_t k, std::uint64_t m, std::uint64_t p_min, std::uint64_t p_max,
                              unsigned threads = 1) {
    if (k == 0 || m == 0) throw DomainError("k and m must be positive");
    if (p_min < 2 || p_min > p_max) throw DomainError("prime range requires 2 <= pmin <= pmax");
    if (p_max > (std::uint64_t{1} << 40)) throw DomainError("pmax above 2^40 is not supported");

    const auto base = sieving_primes_for(p_max);
    const std::uint64_t blocks = (p_max - p_min) / scan_block_size + 1;
    std::vector<std::vector<ResidueReport>> out(blocks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t b; (b = next.fetch_add(1)) < blocks;) {
            const std::uint64_t lo = p_min + b * scan_block_size;
            const std::uint64_t hi = std::min(p_max, lo + scan_block_size - 1);
            for (std::uint64_t p : primes_in_segment(lo, hi, base)) {
                out[b].push_back({p, k, m, detail::run_start_unchecked(p, k, m)});
            }
        }
    };
    threads = std::max(1u, threads);
    if (threads == 1 || blocks == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<std::uint64_t>(threads, blocks); ++t) pool.emplace_back(worker);
    }

    ScanResult result;
    result.estimate.k = k;
    result.estimate.m = m;
    result.estimate.p_min = p_min;
    result.estimate.p_max = p_max;
    for (auto& block : out) {
        for (auto& rep : block) {
            ++result.estimate.primes_scanned;
            if (!rep.r) {
                result.estimate.exceptional.push_back(rep.p);
            } else if (!result.estimate.max_r || *rep.r > *result.estimate.max_r) {
                result.estimate.max_r = rep.r;
                result.estimate.argmax_p = rep.p;
            }
            result.reports.push_back(rep);
        }
    }
    return result;
}

inline std::vector<std::uint64_t> exceptional_primes(std::uint64_t k, std::uint64_t m, std::uint64_t p_max,
                                                     unsigned threads = 1) {
    if (p_max < 2) throw DomainError("pmax must be at least 2");
    return scan_primes(k, m, 2, p_max, threads).estimate.exceptional;
}

/// y' + 1 = z' with both k-th power residues mod p, obtained from a
/// monochromatic x + y = z, x | y in one coset by dividing through by x.
struct ConsecutivePair {
    std::uint64_t y_prime = 0, z_prime = 0;
    SchurWitness witness;
};

/// Requires p > bound. Returns nullopt when {1..bound} holds no monochromatic
/// restricted triple under the coset coloring (bound too small).
inline std::optional<ConsecutivePair> consecutive_pair_via_triple(std::uint64_t p, std::uint64_t k,
                                                                  std::uint64_t bound) {
    require_prime(p);
    if (bound >= p) throw DomainError("bound must be below p");
    auto w = direct_schur_div_search(coset_coloring(p, k), bound);
    if (!w) return std::nullopt;
    const auto x = std::get<Natural>(w->x).convert_to<std::uint64_t>();
    const auto y = std::get<Natural>(w->y).convert_to<std::uint64_t>();
    const auto z = std::get<Natural>(w->z).convert_to<std::uint64_t>();
    return ConsecutivePair{y / x, z / x, std::move(*w)};
}

/// Primes s_prime < p <= p_max for which r(k, 2, p) is missing or exceeds s_prime.
/// Empty whenever s_prime really bounds the restricted Schur number for the coset count.
inline std::vector<ResidueReport> lambda_bound_violations(std::uint64_t k, std::uint64_t s_prime,
                                                          std::uint64_t p_max, unsigned threads = 1) {
    std::vector<ResidueReport> bad;
    if (p_max <= s_prime) return bad;
    for (const auto& rep : scan_primes(k, 2, s_prime + 1, p_max, threads).reports) {
        if (!rep.r || *rep.r > s_prime) bad.push_back(rep);
    }
    return bad;
}

}  // namespace schur_div
