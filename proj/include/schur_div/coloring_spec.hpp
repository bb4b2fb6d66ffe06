#pragma once

// Parser for the coloring mini-language:
//
//   spec     := "parity"
//             | "mod:" M ":" color ("," color)*          exactly M colors
//             | "coset:" P ":" K
//             | "explicit:" PATH                          JSON array, colors of 1..n
//             | "unity:" K ":" [assign ("," assign)*] [":default=" E]
//   assign   := prime "=" exponent
//
// All numbers are unsigned decimal. Errors report a 0-based character position.

#include "schur_div/coloring.hpp"
#include "schur_div/errors.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace schur_div {

namespace detail {

class SpecCursor {
public:
    explicit SpecCursor(std::string_view text) : text_(text) {}

    std::size_t pos() const noexcept { return pos_; }
    bool done() const noexcept { return pos_ >= text_.size(); }
    std::string_view rest() const { return text_.substr(pos_); }

    bool consume(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!consume(token)) throw ParseError("expected '" + std::string(token) + "'", pos_);
    }

    bool peek(char c) const { return !done() && text_[pos_] == c; }

    std::uint64_t number() {
        const std::size_t start = pos_;
        std::uint64_t value = 0;
        while (!done() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (UINT64_MAX - digit) / 10) throw ParseError("number too large", start);
            value = value * 10 + digit;
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected an unsigned integer", start);
        return value;
    }

    void expect_end() {
        if (!done()) throw ParseError("unexpected trailing input", pos_);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

template <typename Build>
Coloring at(std::size_t pos, Build&& build) {
    try {
        return build();
    } catch (const DomainError& e) {
        throw ParseError(e.what(), pos);
    }
}

}  // namespace detail

inline Coloring load_explicit_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open explicit coloring file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error("explicit coloring file '" + path + "': " + e.what());
    }
    if (!doc.is_array()) throw Error("explicit coloring file '" + path + "' must hold a JSON array");
    std::vector<Color> table;
    table.reserve(doc.size());
    for (const auto& v : doc) {
        if (!v.is_number_unsigned()) {
            throw Error("explicit coloring file '" + path + "': entries must be non-negative integers");
        }
        table.push_back(v.get<Color>());
    }
    return Coloring::explicit_table(std::move(table));
}

inline Coloring parse_coloring_spec(std::string_view text) {
    detail::SpecCursor cur(text);
    if (cur.consume("parity")) {
        cur.expect_end();
        return Coloring::parity();
    }
    if (cur.consume("mod:")) {
        const std::size_t at_m = cur.pos();
        const std::uint64_t m = cur.number();
        cur.expect(":");
        std::vector<Color> classes;
        do {
            const std::size_t at_c = cur.pos();
            const std::uint64_t c = cur.number();
            if (c > UINT32_MAX) throw ParseError("color index too large", at_c);
            classes.push_back(static_cast<Color>(c));
        } while (cur.consume(","));
        cur.expect_end();
        return detail::at(at_m, [&] { return Coloring::residue(m, std::move(classes)); });
    }
    if (cur.consume("coset:")) {
        const std::size_t at_p = cur.pos();
        const std::uint64_t p = cur.number();
        cur.expect(":");
        const std::uint64_t k = cur.number();
        cur.expect_end();
        return detail::at(at_p, [&] { return Coloring::coset(p, k); });
    }
    if (cur.consume("explicit:")) {
        if (cur.done()) throw ParseError("expected a file path", cur.pos());
        return load_explicit_coloring(std::string(cur.rest()));
    }
    if (cur.consume("unity:")) {
        const std::size_t at_k = cur.pos();
        const std::uint64_t k = cur.number();
        if (k == 0 || k > UINT32_MAX) throw ParseError("k must be in 1..2^32-1", at_k);
        cur.expect(":");
        std::map<std::uint64_t, std::uint32_t> exps;
        std::uint32_t dflt = 0;
        if (!cur.done() && !cur.peek(':')) {
            do {
                const std::size_t at_p = cur.pos();
                const std::uint64_t p = cur.number();
                cur.expect("=");
                const std::size_t at_e = cur.pos();
                const std::uint64_t e = cur.number();
                if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime", at_p);
                if (e >= k) throw ParseError("exponent must be below k", at_e);
                if (!exps.emplace(p, static_cast<std::uint32_t>(e)).second) {
                    throw ParseError("prime " + std::to_string(p) + " assigned twice", at_p);
                }
            } while (cur.consume(","));
        }
        if (cur.consume(":")) {
            cur.expect("default=");
            const std::size_t at_e = cur.pos();
            const std::uint64_t e = cur.number();
            if (e >= k) throw ParseError("default exponent must be below k", at_e);
            dflt = static_cast<std::uint32_t>(e);
        }
        cur.expect_end();
        return detail::at(at_k, [&] {
            return Coloring::unity(UnityFunction(static_cast<std::uint32_t>(k), std::move(exps), dflt));
        });
    }
    throw ParseError("expected one of parity, mod:, coset:, explicit:, unity:", 0);
}

}  // namespace schur_div
