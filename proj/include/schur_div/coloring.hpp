#pragma once

#include "schur_div/bigint.hpp"
#include "schur_div/errors.hpp"
#include "schur_div/number_theory.hpp"
#include "schur_div/unity_function.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace schur_div {

using Color = std::uint32_t;

/// Colors 1..n from a table; entry t colors the integer t+1.
struct ExplicitRule {
    std::vector<Color> table;
};

/// n is colored by class_map[n mod modulus].
struct ResidueRule {
    std::uint64_t modulus;
    std::vector<Color> class_map;
};

/// Cosets of the k-th powers in (Z/pZ)^*; multiples of p get the extra color `index`.
struct CosetRule {
    std::uint64_t p;
    std::uint64_t k;
    std::uint64_t index;                 // gcd(k, p-1), the number of cosets
    std::vector<std::uint64_t> roots;    // roots[c] = u^((p-1)/index) for coset color c
};

struct UnityRule {
    UnityFunction f;
};

/// A finite coloring of the positive integers. Immutable once built.
class Coloring {
public:
    using Rule = std::variant<ExplicitRule, ResidueRule, CosetRule, UnityRule>;

    static Coloring explicit_table(std::vector<Color> table, std::optional<Color> num_colors = std::nullopt) {
        if (table.empty()) throw DomainError("explicit coloring: table is empty");
        Color l = num_colors.value_or(*std::max_element(table.begin(), table.end()) + 1);
        for (Color c : table) {
            if (c >= l) throw DomainError("explicit coloring: color " + std::to_string(c) + " out of range");
        }
        return Coloring(ExplicitRule{std::move(table)}, l);
    }

    static Coloring residue(std::uint64_t modulus, std::vector<Color> class_map) {
        if (modulus == 0) throw DomainError("residue coloring: modulus must be positive");
        if (class_map.size() != modulus) {
            throw DomainError("residue coloring: expected " + std::to_string(modulus) + " classes, got " +
                              std::to_string(class_map.size()));
        }
        Color l = *std::max_element(class_map.begin(), class_map.end()) + 1;
        return Coloring(ResidueRule{modulus, std::move(class_map)}, l);
    }

    static Coloring parity() { return residue(2, {0, 1}); }

    /// Every positive integer gets color 0.
    static Coloring single() { return residue(1, {0}); }

    static Coloring coset(std::uint64_t p, std::uint64_t k) {
        require_prime(p);
        if (k == 0) throw DomainError("coset coloring: k must be positive");
        const std::uint64_t d = std::gcd(k, p - 1);
        const std::uint64_t e = (p - 1) / d;
        // Scan units upward so colors follow the smallest representative of each coset.
        std::vector<std::uint64_t> roots;
        for (std::uint64_t u = 1; u < p && roots.size() < d; ++u) {
            std::uint64_t w = powmod(u, e, p);
            if (std::find(roots.begin(), roots.end(), w) == roots.end()) roots.push_back(w);
        }
        return Coloring(CosetRule{p, k, d, std::move(roots)}, static_cast<Color>(d + 1));
    }

    static Coloring unity(UnityFunction f) {
        Color l = f.k();
        return Coloring(UnityRule{std::move(f)}, l);
    }

    Color num_colors() const noexcept { return num_colors_; }
    const Rule& rule() const noexcept { return rule_; }

    /// Largest integer in the domain, or nullopt when unbounded.
    std::optional<std::uint64_t> domain_max() const {
        if (auto* e = std::get_if<ExplicitRule>(&rule_)) return e->table.size();
        return std::nullopt;
    }

    /// Modulus for rules evaluable on residues alone (Residue, Coset).
    std::optional<std::uint64_t> modulus() const {
        if (auto* r = std::get_if<ResidueRule>(&rule_)) return r->modulus;
        if (auto* c = std::get_if<CosetRule>(&rule_)) return c->p;
        return std::nullopt;
    }

    bool is_modular() const { return modulus().has_value(); }

    /// Color of any integer congruent to r modulo modulus(); r < modulus().
    Color color_of_residue(std::uint64_t r) const {
        if (auto* res = std::get_if<ResidueRule>(&rule_)) return res->class_map.at(r % res->modulus);
        if (auto* c = std::get_if<CosetRule>(&rule_)) {
            r %= c->p;
            if (r == 0) return static_cast<Color>(c->index);
            std::uint64_t w = powmod(r, (c->p - 1) / c->index, c->p);
            auto it = std::find(c->roots.begin(), c->roots.end(), w);
            return static_cast<Color>(it - c->roots.begin());
        }
        throw EvaluationInfeasible("coloring is not defined by residues");
    }

    Color color_of(std::uint64_t n) const {
        if (n == 0) throw DomainError("colorings are defined on positive integers only");
        if (auto* e = std::get_if<ExplicitRule>(&rule_)) {
            if (n > e->table.size()) {
                throw DomainError("explicit coloring: " + std::to_string(n) + " is outside the domain 1.." +
                                  std::to_string(e->table.size()));
            }
            return e->table[n - 1];
        }
        if (auto* u = std::get_if<UnityRule>(&rule_)) return u->f.evaluate(n);
        return color_of_residue(n % *modulus());
    }

    Color color_of(const Natural& n) const {
        if (n < 1) throw DomainError("colorings are defined on positive integers only");
        if (auto m = modulus()) return color_of_residue(mod_u64(n, *m));
        if (auto* u = std::get_if<UnityRule>(&rule_)) {
            try {
                return u->f.evaluate(n);
            } catch (const BudgetExceeded& e) {
                throw EvaluationInfeasible(e.what());
            }
        }
        auto small = to_u64(n);
        if (!small) throw DomainError("explicit coloring: argument is outside the domain");
        return color_of(*small);
    }

    /// Canonical textual form in the coloring mini-language (explicit tables print as a count).
    std::string describe() const {
        if (auto* e = std::get_if<ExplicitRule>(&rule_)) {
            return "explicit[" + std::to_string(e->table.size()) + "]";
        }
        if (auto* r = std::get_if<ResidueRule>(&rule_)) {
            std::string s = "mod:" + std::to_string(r->modulus) + ":";
            for (std::size_t i = 0; i < r->class_map.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(r->class_map[i]);
            }
            return s;
        }
        if (auto* c = std::get_if<CosetRule>(&rule_)) {
            return "coset:" + std::to_string(c->p) + ":" + std::to_string(c->k);
        }
        const auto& f = std::get<UnityRule>(rule_).f;
        std::string s = "unity:" + std::to_string(f.k()) + ":";
        bool first = true;
        for (const auto& [p, e] : f.prime_exponents()) {
            if (!first) s += ',';
            first = false;
            s += std::to_string(p) + "=" + std::to_string(e);
        }
        return s + ":default=" + std::to_string(f.default_exponent());
    }

private:
    Coloring(Rule rule, Color num_colors) : rule_(std::move(rule)), num_colors_(num_colors) {}

    Rule rule_;
    Color num_colors_;
};

inline Coloring coset_coloring(std::uint64_t p, std::uint64_t k) { return Coloring::coset(p, k); }

inline Coloring unity_coloring(const UnityFunction& f) { return Coloring::unity(f); }

}  // namespace schur_div
