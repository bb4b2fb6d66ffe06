#pragma once

#include "schur_div/bigint.hpp"
#include "schur_div/errors.hpp"
#include "schur_div/number_theory.hpp"

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <string>
#include <vector>

namespace schur_div {

enum class SequenceKind {
    factorial,  // a_1 = 1, a_{n+1} = (a_1 + ... + a_n)!
    product,    // b_1 = 1, b_{n+1} = product of all interval sums b_i + ... + b_j, 1 <= i <= j <= n
};

inline std::string to_string(SequenceKind kind) {
    return kind == SequenceKind::factorial ? "factorial" : "product";
}

inline constexpr std::size_t default_digit_budget = 1'000'000;

/// Terms of a witness sequence with their prefix sums. Indices are 1-based.
///
/// Every interval sum over indices i..j-1 divides every later term, hence
/// every later interval sum starting at j.
class WitnessSequence {
public:
    WitnessSequence(SequenceKind kind, std::vector<Natural> terms) : kind_(kind), terms_(std::move(terms)) {
        prefix_.reserve(terms_.size() + 1);
        prefix_.emplace_back(0);
        for (const auto& t : terms_) prefix_.push_back(prefix_.back() + t);
    }

    SequenceKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Natural>& terms() const noexcept { return terms_; }

    const Natural& term(std::size_t n) const {
        if (n < 1 || n > terms_.size()) {
            throw DomainError("term index " + std::to_string(n) + " outside 1.." + std::to_string(terms_.size()));
        }
        return terms_[n - 1];
    }

    /// S_n = a_1 + ... + a_n for 0 <= n <= size().
    const Natural& prefix_sum(std::size_t n) const {
        if (n > terms_.size()) {
            throw DomainError("prefix index " + std::to_string(n) + " outside 0.." + std::to_string(terms_.size()));
        }
        return prefix_[n];
    }

    /// a_i + ... + a_{j-1}, for 1 <= i < j <= size()+1.
    Natural interval_sum(std::size_t i, std::size_t j) const {
        if (i < 1 || i >= j || j > terms_.size() + 1) {
            throw DomainError("interval (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") requires 1 <= i < j <= " + std::to_string(terms_.size() + 1));
        }
        return prefix_[j - 1] - prefix_[i - 1];
    }

private:
    SequenceKind kind_;
    std::vector<Natural> terms_;
    std::vector<Natural> prefix_;
};

namespace detail {

inline double log10_factorial(const Natural& n) {
    return std::lgamma(n.convert_to<double>() + 1.0) / std::log(10.0);
}

inline Natural factorial(std::uint64_t n) {
    Natural out;
    mpz_fac_ui(out.backend().data(), n);
    return out;
}

[[noreturn]] inline void over_budget(std::size_t index, double need, std::size_t budget) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", need);
    throw BudgetExceeded("term " + std::to_string(index) + " needs about " + buf +
                             " decimal digits; digit budget is " + std::to_string(budget),
                         index);
}

}  // namespace detail

/// First `count` terms. Throws BudgetExceeded naming the first term that would
/// push the total decimal digits of all terms past `digit_budget`.
inline WitnessSequence generate(SequenceKind kind, std::size_t count,
                                std::size_t digit_budget = default_digit_budget) {
    if (count < 1) throw DomainError("sequence length must be at least 1");
    if (digit_budget < 1) throw DomainError("digit budget must be at least 1");
    std::vector<Natural> terms{Natural(1)};
    std::size_t used = 1;
    Natural sum = 1;
    while (terms.size() < count) {
        const std::size_t index = terms.size() + 1;
        Natural next;
        if (kind == SequenceKind::factorial) {
            const double digits = detail::log10_factorial(sum) + 1.0;
            if (!(digits <= static_cast<double>(digit_budget - used))) {
                detail::over_budget(index, digits, digit_budget);
            }
            next = detail::factorial(sum.convert_to<std::uint64_t>());
        } else {
            std::vector<Natural> sums;
            std::size_t digits = 0;
            for (std::size_t i = 0; i < terms.size(); ++i) {
                Natural run = 0;
                for (std::size_t j = i; j < terms.size(); ++j) {
                    run += terms[j];
                    digits += decimal_digits(run);
                    sums.push_back(run);
                }
            }
            if (digits > digit_budget - used) detail::over_budget(index, static_cast<double>(digits), digit_budget);
            next = 1;
            for (const auto& s : sums) next *= s;
        }
        used += decimal_digits(next);
        sum += next;
        terms.push_back(std::move(next));
    }
    return WitnessSequence(kind, std::move(terms));
}

struct IndexTriple {
    std::size_t i, j, k;
    bool operator==(const IndexTriple&) const = default;
};

struct DivisibilityReport {
    std::size_t limit = 0;
    std::size_t triples_checked = 0;
    std::vector<IndexTriple> violations;

    bool holds() const noexcept { return violations.empty(); }
};

/// Checks interval_sum(i, j) | interval_sum(j, k) for all 1 <= i < j < k <= limit.
/// Interval sums reach index limit-1, so limit may be one past the sequence length.
inline DivisibilityReport check_divisibility_lemma(const WitnessSequence& seq, std::size_t limit) {
    if (limit > seq.size() + 1) {
        throw DomainError("limit " + std::to_string(limit) + " exceeds sequence length + 1 = " +
                          std::to_string(seq.size() + 1));
    }
    DivisibilityReport report;
    report.limit = limit;
    for (std::size_t i = 1; i <= limit; ++i) {
        for (std::size_t j = i + 1; j <= limit; ++j) {
            const Natural x = seq.interval_sum(i, j);
            for (std::size_t k = j + 1; k <= limit; ++k) {
                ++report.triples_checked;
                if (seq.interval_sum(j, k) % x != 0) report.violations.push_back({i, j, k});
            }
        }
    }
    return report;
}

/// Prefix sums S_0..S_count of the factorial sequence reduced mod m, without
/// materializing the terms. Once S_n >= m every later term (S_n)! is divisible by m.
inline std::vector<std::uint64_t> factorial_prefix_sums_mod(std::size_t count, std::uint64_t m) {
    if (m < 2) throw DomainError("modulus must be at least 2");
    std::vector<std::uint64_t> prefix{0};
    prefix.reserve(count + 1);
    Natural exact = 0;
    bool large = false;  // exact >= m
    for (std::size_t n = 1; n <= count; ++n) {
        std::uint64_t term_mod;
        Natural term_exact;
        if (n == 1) {
            term_exact = 1;
            term_mod = 1 % m;
        } else if (large) {
            term_mod = 0;
        } else {
            const std::uint64_t s = exact.convert_to<std::uint64_t>();
            term_mod = 1 % m;
            for (std::uint64_t t = 2; t <= s && term_mod != 0; ++t) term_mod = mulmod(term_mod, t % m, m);
            term_exact = detail::factorial(s);
        }
        if (!large) {
            exact += term_exact;
            large = exact >= m;
        }
        std::uint64_t next = prefix.back() + term_mod;
        if (next >= m || next < term_mod) next -= m;
        prefix.push_back(next);
    }
    return prefix;
}

/// (a_i + ... + a_{j-1}) mod m for the factorial sequence, for any 1 <= i < j.
inline std::uint64_t interval_sum_mod(SequenceKind kind, std::size_t i, std::size_t j, std::uint64_t m) {
    if (kind != SequenceKind::factorial) {
        throw DomainError("modular interval sums are only supported for the factorial sequence");
    }
    if (i < 1 || i >= j) throw DomainError("interval requires 1 <= i < j");
    const auto prefix = factorial_prefix_sums_mod(j - 1, m);
    const std::uint64_t hi = prefix[j - 1], lo = prefix[i - 1];
    return hi >= lo ? hi - lo : hi + (m - lo);
}

}  // namespace schur_div
