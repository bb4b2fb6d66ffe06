#pragma once

// Command-line front end shared by the schur-div executable and its tests.

#include "schur_div/coloring_spec.hpp"
#include "schur_div/multiplicative.hpp"
#include "schur_div/ramsey.hpp"
#include "schur_div/residues.hpp"
#include "schur_div/schur_search.hpp"
#include "schur_div/search_cache.hpp"
#include "schur_div/sequences.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace schur_div::cli {

inline constexpr const char* tool_version = "1.0.0";

inline constexpr int exit_ok = 0;
inline constexpr int exit_runtime = 1;
inline constexpr int exit_usage = 2;

/// Thrown for semantically invalid flag values after CLI11 parsing succeeded.
class UsageError : public Error {
public:
    using Error::Error;
};

namespace detail {

using nlohmann::json;

inline json term_json(const WitnessTerm& t) {
    if (const auto* n = std::get_if<Natural>(&t)) return to_decimal(*n);
    const auto& iv = std::get<Interval>(t);
    return json{{"i", iv.i}, {"j", iv.j}};
}

inline json witness_json(const SchurWitness& w) {
    json out{{"x", term_json(w.x)},
             {"y", term_json(w.y)},
             {"z", term_json(w.z)},
             {"color", w.color},
             {"quotient", w.quotient ? json(to_decimal(*w.quotient)) : json(nullptr)},
             {"via", to_string(w.via)}};
    if (w.triangle) {
        out["triangle"] = {w.triangle->i, w.triangle->j, w.triangle->k};
        out["ramsey_vertices"] = w.ramsey_vertices;
        out["ramsey_exact"] = w.ramsey_exact;
    }
    return out;
}

inline json report(const std::string& subcommand, json parameters) {
    return json{{"tool_version", tool_version}, {"subcommand", subcommand}, {"parameters", std::move(parameters)}};
}

inline std::map<std::uint64_t, std::uint32_t> parse_assignments(const std::string& text, std::uint32_t k) {
    std::map<std::uint64_t, std::uint32_t> out;
    if (text.empty()) return out;
    // Reuse the coloring grammar so both surfaces accept the same syntax.
    const Coloring c = parse_coloring_spec("unity:" + std::to_string(k) + ":" + text);
    return std::get<UnityRule>(c.rule()).f.prime_exponents();
}

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace detail

/// Runs one subcommand. Reports go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 runtime failure, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::json;

    CLI::App app{"Divisibility-restricted Schur numbers, witnesses and consecutive power residues", "schur-div"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", tool_version);

    // seq
    auto* seq = app.add_subcommand("seq", "generate a witness sequence and check its divisibility lemma");
    std::string kind = "factorial";
    std::size_t count = 0;
    bool check = false;
    std::optional<std::size_t> limit;
    std::size_t budget_digits = default_digit_budget;
    seq->add_option("--kind", kind, "factorial | product")->check(CLI::IsMember({"factorial", "product"}));
    seq->add_option("--count", count, "number of terms")->required()->check(CLI::Range(std::size_t{1}, SIZE_MAX));
    seq->add_flag("--check-divisibility", check, "check sum(i,j) | sum(j,k) for all i<j<k<=limit");
    seq->add_option("--limit", limit, "largest index in the divisibility check (default count+1)");
    seq->add_option("--budget-digits", budget_digits, "total decimal digits allowed across all terms");

    // witness
    auto* wit = app.add_subcommand("witness", "find a monochromatic x+y=z with x|y");
    std::string coloring_spec;
    std::string via = "direct";
    std::uint64_t max_n = 10000;
    wit->add_option("--coloring", coloring_spec, "parity | mod:M:c0,... | coset:P:K | explicit:PATH | unity:K:...")
        ->required();
    wit->add_option("--via", via, "ramsey | direct")->check(CLI::IsMember({"ramsey", "direct"}));
    wit->add_option("--max-n", max_n, "search range for --via direct");
    wit->add_option("--budget-digits", budget_digits, "digit budget for materializing interval sums");

    // ramsey
    auto* ram = app.add_subcommand("ramsey", "R_3(l) value or bound");
    std::uint32_t ram_colors = 2;
    bool verify = false;
    ram->add_option("--colors", ram_colors, "number of colors l")->required()->check(CLI::PositiveNumber);
    ram->add_flag("--verify", verify, "exhaustively verify the K_5 / K_6 facts behind R_3(2) = 6");

    // schur
    auto* sch = app.add_subcommand("schur", "exact (restricted) Schur number search");
    std::uint32_t colors = 0;
    bool restricted = false;
    std::uint64_t sch_max_n = 2048;
    std::uint64_t budget_nodes = 0;
    double budget_secs = 0;
    unsigned threads = detail::default_threads();
    unsigned split_depth = 8;
    std::string cache_path;
    sch->add_option("--colors", colors, "number of colors l")->required()->check(CLI::PositiveNumber);
    sch->add_flag("--restricted", restricted, "require x | y");
    sch->add_option("--max-n", sch_max_n, "largest integer to color");
    sch->add_option("--budget-nodes", budget_nodes, "node limit (0 = none)");
    sch->add_option("--budget-secs", budget_secs, "wall-clock limit in seconds (0 = none)");
    sch->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    sch->add_option("--split-depth", split_depth, "prefix depth handed to workers");
    sch->add_option("--cache", cache_path, "cache file (default $SCHUR_DIV_CACHE)");

    // residues
    auto* res = app.add_subcommand("residues", "scan r(k,m,p) over a prime range");
    std::uint64_t k = 0, m = 0, pmin = 0, pmax = 0;
    std::string format = "json";
    bool with_reports = false;
    res->add_option("--k", k, "power")->required()->check(CLI::PositiveNumber);
    res->add_option("--m", m, "run length")->required()->check(CLI::PositiveNumber);
    res->add_option("--pmin", pmin, "smallest prime candidate")->required();
    res->add_option("--pmax", pmax, "largest prime candidate")->required();
    res->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    res->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    res->add_flag("--reports", with_reports, "include per-prime reports in JSON output");

    // mult
    auto* mul = app.add_subcommand("mult", "completely multiplicative functions into k-th roots of unity");
    std::uint32_t mk = 0;
    std::string primes;
    std::uint32_t default_exp = 0;
    std::uint64_t bound = 1000;
    std::optional<std::uint64_t> s_prime;
    mul->add_option("--k", mk, "order of the root-of-unity group")->required()->check(CLI::PositiveNumber);
    mul->add_option("--primes", primes, "p1=e1,p2=e2,...");
    mul->add_option("--default-exp", default_exp, "exponent of unlisted primes");
    mul->add_option("--bound", bound, "search bound for the minimal a");
    mul->add_option("--verify-s-prime", s_prime, "restricted Schur bound to verify");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        json doc;
        if (seq->parsed()) {
            const SequenceKind sk = kind == "factorial" ? SequenceKind::factorial : SequenceKind::product;
            const WitnessSequence s = generate(sk, count, budget_digits);
            doc = detail::report("seq", {{"kind", kind}, {"count", count}, {"budget_digits", budget_digits}});
            doc["kind"] = kind;
            doc["count"] = count;
            json terms = json::array();
            for (const auto& t : s.terms()) terms.push_back(to_decimal(t));
            doc["terms"] = terms;
            doc["checked"] = check;
            json violations = json::array();
            if (check) {
                const std::size_t lim = limit.value_or(count + 1);
                if (lim > count + 1) throw UsageError("--limit must not exceed --count + 1");
                const auto rep = check_divisibility_lemma(s, lim);
                for (const auto& v : rep.violations) violations.push_back({v.i, v.j, v.k});
                doc["limit"] = lim;
                doc["triples_checked"] = rep.triples_checked;
            }
            doc["violations"] = violations;
        } else if (wit->parsed()) {
            const Coloring c = parse_coloring_spec(coloring_spec);
            doc = detail::report("witness", {{"coloring", coloring_spec}, {"via", via}, {"max_n", max_n}});
            doc["num_colors"] = c.num_colors();
            std::optional<SchurWitness> w;
            if (via == "ramsey") {
                w = theorem4_witness(c, budget_digits);
            } else {
                w = direct_schur_div_search(c, max_n);
            }
            doc["found"] = w.has_value();
            doc["witness"] = w ? detail::witness_json(*w) : json(nullptr);
            doc["validated"] = w ? validate_witness(c, *w) : false;
        } else if (ram->parsed()) {
            const R3Value r = r3_value_or_bound(ram_colors);
            doc = detail::report("ramsey", {{"colors", ram_colors}, {"verify", verify}});
            doc["l"] = ram_colors;
            doc["value"] = r.value;
            doc["exact"] = r.exact;
            if (verify) {
                const auto pent = find_mono_triangle(pentagon_coloring());
                doc["verification"] = {{"k5_triangle_free_two_colorings", count_triangle_free_two_colorings(5)},
                                       {"k6_triangle_free_two_colorings", count_triangle_free_two_colorings(6)},
                                       {"pentagon_has_mono_triangle", pent.has_value()}};
            }
        } else if (sch->parsed()) {
            if (cache_path.empty()) {
                if (const char* env = std::getenv("SCHUR_DIV_CACHE")) cache_path = env;
            }
            std::optional<SearchCache> cache;
            if (!cache_path.empty()) cache = SearchCache::load(cache_path);

            doc = detail::report("schur", {{"colors", colors},
                                           {"restricted", restricted},
                                           {"max_n", sch_max_n},
                                           {"budget_nodes", budget_nodes},
                                           {"budget_secs", budget_secs},
                                           {"split_depth", split_depth}});
            SearchResult r;
            bool from_cache = false;
            const auto cached = cache ? cache->lookup(colors, restricted) : std::nullopt;
            if (cached && cached->status == SearchStatus::exact) {
                r.l = colors;
                r.restricted = restricted;
                r.status = SearchStatus::exact;
                r.W = cached->n;
                r.S = cached->n + 1;
                r.witness_coloring = cached->coloring;
                from_cache = true;
            } else {
                SearchOptions opt;
                opt.max_n = sch_max_n;
                opt.budget = {budget_nodes, budget_secs};
                opt.threads = threads;
                opt.split_depth = split_depth;
                r = schur_number(colors, restricted, opt);
                err << "schur: " << r.nodes << " nodes in " << r.wall_seconds << " s\n";
                if (r.status == SearchStatus::lower_bound && cached && cached->n > r.W) {
                    // Resume: a previous run already reached further.
                    r.W = cached->n;
                    r.witness_coloring = cached->coloring;
                    from_cache = true;
                }
                if (cache && cache->record(r)) cache->save(cache_path);
            }
            doc["l"] = r.l;
            doc["restricted"] = r.restricted;
            doc["status"] = to_string(r.status);
            doc["W"] = r.W;
            doc["S"] = r.S ? json(*r.S) : json(nullptr);
            doc["witness_coloring"] = r.witness_coloring;
            doc["nodes"] = r.nodes;
            doc["cap_reached"] = r.cap_reached;
            doc["budget_exhausted"] = r.budget_exhausted;
            doc["from_cache"] = from_cache;
        } else if (res->parsed()) {
            if (pmin < 2 || pmin > pmax) throw UsageError("--pmin/--pmax require 2 <= pmin <= pmax");
            const ScanResult scan = scan_primes(k, m, pmin, pmax, threads);
            const auto& est = scan.estimate;
            if (format == "csv") {
                out << "p,k,m,r,exceptional\n";
                for (const auto& rep : scan.reports) {
                    out << rep.p << ',' << rep.k << ',' << rep.m << ',' << (rep.r ? std::to_string(*rep.r) : "")
                        << ',' << (rep.exceptional() ? "true" : "false") << '\n';
                }
                out << "max_r=" << (est.max_r ? std::to_string(*est.max_r) : "")
                    << ",argmax_p=" << (est.argmax_p ? std::to_string(*est.argmax_p) : "") << '\n';
                return exit_ok;
            }
            doc = detail::report("residues", {{"k", k}, {"m", m}, {"pmin", pmin}, {"pmax", pmax}});
            doc["k"] = est.k;
            doc["m"] = est.m;
            doc["p_min"] = est.p_min;
            doc["p_max"] = est.p_max;
            doc["max_r"] = est.max_r ? json(*est.max_r) : json(nullptr);
            doc["argmax_p"] = est.argmax_p ? json(*est.argmax_p) : json(nullptr);
            doc["exceptional"] = est.exceptional;
            doc["primes_scanned"] = est.primes_scanned;
            if (with_reports) {
                json reps = json::array();
                for (const auto& rep : scan.reports) {
                    reps.push_back({{"p", rep.p}, {"r", rep.r ? json(*rep.r) : json(nullptr)},
                                    {"exceptional", rep.exceptional()}});
                }
                doc["reports"] = reps;
            }
        } else if (mul->parsed()) {
            const UnityFunction f(mk, detail::parse_assignments(primes, mk), default_exp);
            doc = detail::report("mult", {{"k", mk}, {"primes", primes}, {"default_exp", default_exp},
                                          {"bound", bound},
                                          {"verify_s_prime", s_prime ? json(*s_prime) : json(nullptr)}});
            doc["k"] = mk;
            const auto a = min_consecutive_ones(f, bound);
            doc["minimal_a"] = a ? json(*a) : json(nullptr);
            doc["witness"] = nullptr;
            if (s_prime) {
                const Theorem6Record rec = verify_theorem6_bound(f, *s_prime);
                doc["witness"] = {{"x", rec.x}, {"y", rec.y}, {"z", rec.z}, {"a", rec.a}};
            }
        }
        out << doc.dump() << '\n';
        return exit_ok;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return exit_usage;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_runtime;
    }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace schur_div::cli
