#pragma once

#include "schur_div/bigint.hpp"
#include "schur_div/coloring.hpp"
#include "schur_div/errors.hpp"
#include "schur_div/sequences.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace schur_div {

/// R_3(l): exact for l <= 3, otherwise the bound R_3(l) <= l*(R_3(l-1) - 1) + 2.
struct R3Value {
    std::uint64_t value;
    bool exact;
};

inline R3Value r3_value_or_bound(std::uint32_t l) {
    if (l == 0) throw DomainError("number of colors must be positive");
    static constexpr std::uint64_t known[] = {3, 6, 17};
    if (l <= 3) return {known[l - 1], true};
    std::uint64_t r = known[2];
    for (std::uint64_t c = 4; c <= l; ++c) {
        std::uint64_t next;
        if (__builtin_mul_overflow(c, r - 1, &next) || __builtin_add_overflow(next, 2, &next)) {
            throw DomainError("Ramsey bound for " + std::to_string(l) + " colors overflows 64 bits");
        }
        r = next;
    }
    return {r, false};
}

/// Coloring of the edges of K_n on vertices 1..n.
class EdgeColoring {
public:
    explicit EdgeColoring(std::size_t vertices, Color fill = 0)
        : vertices_(vertices), colors_(vertices < 2 ? 0 : vertices * (vertices - 1) / 2, fill) {}

    template <typename F>
    static EdgeColoring from(std::size_t vertices, F&& color_of_edge) {
        EdgeColoring ec(vertices);
        for (std::size_t i = 1; i <= vertices; ++i) {
            for (std::size_t j = i + 1; j <= vertices; ++j) ec.set(i, j, color_of_edge(i, j));
        }
        return ec;
    }

    std::size_t vertices() const noexcept { return vertices_; }

    Color color(std::size_t i, std::size_t j) const { return colors_[index(i, j)]; }
    void set(std::size_t i, std::size_t j, Color c) { colors_[index(i, j)] = c; }

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        if (i < 1 || i == j || j > vertices_) {
            throw DomainError("edge (" + std::to_string(i) + ", " + std::to_string(j) + ") not in K_" +
                              std::to_string(vertices_));
        }
        // Row-major upper triangle, 0-based rows.
        const std::size_t r = i - 1, c = j - 1;
        return r * vertices_ - r * (r + 1) / 2 + (c - r - 1);
    }

    std::size_t vertices_;
    std::vector<Color> colors_;
};

struct Triangle {
    std::size_t i, j, k;
    Color color;
    bool operator==(const Triangle&) const = default;
};

/// Lexicographically smallest monochromatic triangle i < j < k, if any.
inline std::optional<Triangle> find_mono_triangle(const EdgeColoring& ec) {
    const std::size_t n = ec.vertices();
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            const Color c = ec.color(i, j);
            for (std::size_t k = j + 1; k <= n; ++k) {
                if (ec.color(i, k) == c && ec.color(j, k) == c) return Triangle{i, j, k, c};
            }
        }
    }
    return std::nullopt;
}

/// K_5 with the 5-cycle 1-2-3-4-5-1 in color 0 and the diagonals in color 1.
inline EdgeColoring pentagon_coloring() {
    return EdgeColoring::from(5, [](std::size_t i, std::size_t j) -> Color {
        const std::size_t d = j - i;
        return (d == 1 || d == 4) ? 0 : 1;
    });
}

/// Number of 2-colorings of the edges of K_n without a monochromatic triangle,
/// by exhaustive enumeration (n <= 8).
inline std::uint64_t count_triangle_free_two_colorings(std::size_t n) {
    if (n > 8) throw DomainError("exhaustive enumeration is limited to K_8");
    const std::size_t edges = n < 2 ? 0 : n * (n - 1) / 2;
    std::vector<std::uint32_t> triangle_masks;
    {
        std::vector<std::size_t> bit_of(n * n);
        std::size_t b = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) bit_of[i * n + j] = b++;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                for (std::size_t k = j + 1; k < n; ++k) {
                    triangle_masks.push_back((1u << bit_of[i * n + j]) | (1u << bit_of[i * n + k]) |
                                             (1u << bit_of[j * n + k]));
                }
            }
        }
    }
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
        const auto m = static_cast<std::uint32_t>(mask);
        bool mono = false;
        for (std::uint32_t t : triangle_masks) {
            const std::uint32_t on = m & t;
            if (on == 0 || on == t) {
                mono = true;
                break;
            }
        }
        if (!mono) ++count;
    }
    return count;
}

/// The interval sum a_i + ... + a_{j-1} of the factorial sequence, kept symbolic.
struct Interval {
    std::size_t i, j;
    bool operator==(const Interval&) const = default;
};

using WitnessTerm = std::variant<Natural, Interval>;

enum class Via { ramsey, direct };

inline std::string to_string(Via via) { return via == Via::ramsey ? "ramsey" : "direct"; }

/// x + y = z with x | y, all three of one color.
struct SchurWitness {
    WitnessTerm x, y, z;
    std::optional<Natural> quotient;  // y / x; absent when the terms are symbolic
    Color color = 0;
    Via via = Via::direct;
    std::optional<Triangle> triangle;  // vertices of K_R, Ramsey construction only
    std::uint64_t ramsey_vertices = 0;
    bool ramsey_exact = true;  // false when R came from the recursive upper bound

    bool symbolic() const { return std::holds_alternative<Interval>(x); }
};

/// Graphs larger than this are refused rather than allocated.
inline constexpr std::uint64_t max_ramsey_vertices = 4096;

/// Runs the divisibility-Schur construction: colors edge (i, j) of K_R by the
/// color of a_i + ... + a_{j-1}, takes a monochromatic triangle i < j < k and
/// returns x = sum(i, j), y = sum(j, k), z = sum(i, k).
inline SchurWitness theorem4_witness(const Coloring& c, std::size_t digit_budget = default_digit_budget) {
    const R3Value r3 = r3_value_or_bound(c.num_colors());
    if (r3.value > max_ramsey_vertices) {
        throw EvaluationInfeasible("K_" + std::to_string(r3.value) + " is too large to color");
    }
    const std::size_t R = r3.value;

    EdgeColoring ec(R);
    if (auto m = c.modulus()) {
        const std::vector<std::uint64_t> prefix =
            *m >= 2 ? factorial_prefix_sums_mod(R - 1, *m) : std::vector<std::uint64_t>(R, 0);
        for (std::size_t i = 1; i <= R; ++i) {
            for (std::size_t j = i + 1; j <= R; ++j) {
                const std::uint64_t hi = prefix[j - 1], lo = prefix[i - 1];
                const std::uint64_t r = *m < 2 ? 0 : (hi >= lo ? hi - lo : hi + (*m - lo));
                ec.set(i, j, c.color_of_residue(r));
            }
        }
    } else {
        try {
            const WitnessSequence seq = generate(SequenceKind::factorial, R - 1, digit_budget);
            for (std::size_t i = 1; i <= R; ++i) {
                for (std::size_t j = i + 1; j <= R; ++j) ec.set(i, j, c.color_of(seq.interval_sum(i, j)));
            }
        } catch (const BudgetExceeded& e) {
            throw EvaluationInfeasible(std::string("interval sums cannot be materialized: ") + e.what());
        } catch (const DomainError& e) {
            throw EvaluationInfeasible(std::string("coloring cannot evaluate interval sums: ") + e.what());
        }
    }

    const auto tri = find_mono_triangle(ec);
    if (!tri) {
        // Unreachable for a correct Ramsey value; reported rather than asserted.
        throw Error("no monochromatic triangle in K_" + std::to_string(R));
    }

    SchurWitness w;
    w.x = Interval{tri->i, tri->j};
    w.y = Interval{tri->j, tri->k};
    w.z = Interval{tri->i, tri->k};
    w.color = tri->color;
    w.via = Via::ramsey;
    w.triangle = tri;
    w.ramsey_vertices = R;
    w.ramsey_exact = r3.exact;
    try {
        const WitnessSequence seq = generate(SequenceKind::factorial, tri->k - 1, digit_budget);
        Natural x = seq.interval_sum(tri->i, tri->j);
        Natural y = seq.interval_sum(tri->j, tri->k);
        w.quotient = y / x;
        w.z = seq.interval_sum(tri->i, tri->k);
        w.x = std::move(x);
        w.y = std::move(y);
    } catch (const BudgetExceeded&) {
        // Left symbolic.
    }
    return w;
}

/// Scans (x, a*x, (a+1)*x) with z = (a+1)*x <= n_max by increasing z, then x,
/// and returns the first monochromatic triple.
inline std::optional<SchurWitness> direct_schur_div_search(const Coloring& c, std::uint64_t n_max) {
    if (auto dmax = c.domain_max(); dmax && n_max > *dmax) {
        throw DomainError("search range 1.." + std::to_string(n_max) + " exceeds the coloring domain 1.." +
                          std::to_string(*dmax));
    }
    std::vector<Color> color(n_max + 1, 0);
    for (std::uint64_t n = 1; n <= n_max; ++n) color[n] = c.color_of(n);

    std::vector<std::uint64_t> divisors;
    for (std::uint64_t z = 2; z <= n_max; ++z) {
        divisors.clear();
        for (std::uint64_t d = 1; d * d <= z; ++d) {
            if (z % d) continue;
            divisors.push_back(d);
            if (d * d != z) divisors.push_back(z / d);
        }
        std::sort(divisors.begin(), divisors.end());
        for (std::uint64_t x : divisors) {
            if (2 * x > z) break;
            const std::uint64_t y = z - x;
            if (color[x] == color[y] && color[y] == color[z]) {
                SchurWitness w;
                w.x = Natural(x);
                w.y = Natural(y);
                w.z = Natural(z);
                w.quotient = Natural(y / x);
                w.color = color[x];
                w.via = Via::direct;
                return w;
            }
        }
    }
    return std::nullopt;
}

/// Re-evaluates the coloring on a witness: x + y = z, x | y, quotient = y / x
/// and all three colored `color`. Symbolic witnesses must be adjacent intervals
/// (divisibility then follows from the sequence lemma) and are evaluated mod
/// the coloring's modulus.
inline bool validate_witness(const Coloring& c, const SchurWitness& w) {
    if (w.symbolic()) {
        const auto* x = std::get_if<Interval>(&w.x);
        const auto* y = std::get_if<Interval>(&w.y);
        const auto* z = std::get_if<Interval>(&w.z);
        if (!x || !y || !z) return false;
        if (!(x->i < x->j && x->j == y->i && y->i < y->j && z->i == x->i && z->j == y->j)) return false;
        const auto m = c.modulus();
        if (!m) return false;
        auto color_of = [&](const Interval& iv) {
            return *m < 2 ? c.color_of_residue(0)
                          : c.color_of_residue(interval_sum_mod(SequenceKind::factorial, iv.i, iv.j, *m));
        };
        return color_of(*x) == w.color && color_of(*y) == w.color && color_of(*z) == w.color;
    }
    const auto* x = std::get_if<Natural>(&w.x);
    const auto* y = std::get_if<Natural>(&w.y);
    const auto* z = std::get_if<Natural>(&w.z);
    if (!x || !y || !z || *x < 1 || *y < 1) return false;
    if (*x + *y != *z || *y % *x != 0) return false;
    if (w.quotient && *w.quotient != *y / *x) return false;
    return c.color_of(*x) == w.color && c.color_of(*y) == w.color && c.color_of(*z) == w.color;
}

}  // namespace schur_div
