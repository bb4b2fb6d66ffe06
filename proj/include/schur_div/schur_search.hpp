#pragma once

#include "schur_div/coloring.hpp"
#include "schur_div/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace schur_div {

/// x + y = z with x <= y; `restricted` triples additionally have x | y.
struct ForbiddenTriple {
    std::uint64_t x, y, z;
    bool restricted;
    bool operator==(const ForbiddenTriple&) const = default;
};

/// All forbidden triples inside {1..n}, sorted by (z, x).
inline std::vector<ForbiddenTriple> forbidden_triples(std::uint64_t n, bool restricted) {
    std::vector<ForbiddenTriple> out;
    for (std::uint64_t z = 2; z <= n; ++z) {
        for (std::uint64_t x = 1; 2 * x <= z; ++x) {
            const std::uint64_t y = z - x;
            if (restricted && y % x != 0) continue;
            out.push_back({x, y, z, restricted});
        }
    }
    return out;
}

/// First monochromatic forbidden triple under `colors` (colors[t] colors t+1), if any.
inline std::optional<ForbiddenTriple> find_monochromatic(const std::vector<Color>& colors, bool restricted) {
    for (const auto& t : forbidden_triples(colors.size(), restricted)) {
        if (colors[t.x - 1] == colors[t.y - 1] && colors[t.y - 1] == colors[t.z - 1]) return t;
    }
    return std::nullopt;
}

struct SearchBudget {
    std::uint64_t nodes = 0;  // 0 = unlimited
    double seconds = 0;       // 0 = unlimited
};

struct SearchOptions {
    std::uint64_t max_n = 2048;  // largest integer the search will try to color
    SearchBudget budget;
    unsigned threads = 1;
    unsigned split_depth = 8;  // integers colored before subtrees are handed to workers
    bool existence_only = false;  // only a coloring of all of 1..max_n is wanted
};

enum class SearchStatus { exact, lower_bound };

inline std::string to_string(SearchStatus s) { return s == SearchStatus::exact ? "exact" : "lower_bound"; }

struct SearchResult {
    Color l = 0;
    bool restricted = false;
    SearchStatus status = SearchStatus::lower_bound;
    std::uint64_t W = 0;                // largest n with a valid coloring found
    std::optional<std::uint64_t> S;     // W + 1, only when exact
    std::vector<Color> witness_coloring;  // colors of 1..W
    std::uint64_t nodes = 0;
    double wall_seconds = 0;
    bool budget_exhausted = false;
    bool cap_reached = false;  // W == max_n; the true value may be larger
};

namespace detail {

struct SharedSearchState {
    SearchBudget budget;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    // Lowest task index whose subtree colored all of 1..max_n; later tasks may stop.
    std::atomic<std::size_t> full_task{SIZE_MAX};

    void charge(std::uint64_t n) {
        const std::uint64_t total = nodes.fetch_add(n, std::memory_order_relaxed) + n;
        if (budget.nodes && total >= budget.nodes) abort.store(true, std::memory_order_relaxed);
        if (budget.seconds > 0) {
            const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
            if (el.count() >= budget.seconds) abort.store(true, std::memory_order_relaxed);
        }
    }
};

/// Depth-first coloring of 1, 2, 3, ... in natural order.
///
/// forbidden_[z*l + c] counts the triples (x, y, z) with x and y already
/// colored c, so z may take c only while the count is zero. A z whose l
/// counters are all positive can never be colored and prunes the branch.
class ColoringSearch {
public:
    static constexpr Color unassigned = UINT32_MAX;
    static constexpr std::uint64_t flush_interval = 1024;

    ColoringSearch(Color l, bool restricted, std::uint64_t max_n, SharedSearchState& shared)
        : l_(l), restricted_(restricted), max_n_(max_n), shared_(shared),
          color_(max_n + 2, unassigned), forbidden_((max_n + 2) * l, 0), members_(l), count_(l, 0) {
        if (restricted_) {
            divisors_.resize(max_n + 1);
            for (std::uint64_t d = 1; d <= max_n; ++d) {
                for (std::uint64_t m = d; m <= max_n; m += d) divisors_[m].push_back(static_cast<std::uint32_t>(d));
            }
        }
    }

    ~ColoringSearch() { flush(); }

    std::uint64_t best() const noexcept { return best_; }
    const std::vector<Color>& best_coloring() const noexcept { return best_coloring_; }
    std::uint64_t nodes() const noexcept { return nodes_total_; }

    /// Only colorings of all of 1..max_n matter; prune on any unreachable integer.
    void set_existence_only(bool on) noexcept { existence_only_ = on; }

    /// Enumerates valid colorings of 1..depth and hands each to `sink` instead of recursing further.
    template <typename Sink>
    void enumerate_prefixes(std::uint64_t depth, Sink&& sink) {
        prefix_depth_ = depth;
        prefix_sink_ = [&](const std::vector<Color>& p) { sink(p); };
        dfs(1);
        prefix_sink_ = nullptr;
    }

    /// Replays a prefix (which must be valid) and searches every extension of it.
    void search_from(const std::vector<Color>& prefix, std::size_t task) {
        task_ = task;
        for (std::size_t t = 0; t < prefix.size(); ++t) (void)assign(t + 1, prefix[t]);
        record(prefix.size());
        dfs(prefix.size() + 1);
        for (std::size_t t = prefix.size(); t > 0; --t) unassign(t);
    }

    void flush() {
        if (nodes_pending_) {
            shared_.charge(nodes_pending_);
            nodes_pending_ = 0;
        }
    }

private:
    bool stopped() const {
        return shared_.abort.load(std::memory_order_relaxed) ||
               shared_.full_task.load(std::memory_order_relaxed) < task_;
    }

    void dfs(std::uint64_t n) {
        if (n > max_n_) return;
        const Color top = std::min<Color>(used_, l_ - 1);
        for (Color c = 0; c <= top; ++c) {
            if (forbidden_[n * l_ + c]) continue;
            ++nodes_total_;
            if (++nodes_pending_ >= flush_interval) flush();
            if (stopped()) return;
            const std::uint64_t dead = assign(n, c);
            record(n);
            if (n == max_n_) {
                unassign(n);
                std::size_t cur = shared_.full_task.load();
                while (task_ < cur && !shared_.full_task.compare_exchange_weak(cur, task_)) {
                }
                full_ = true;
                return;
            }
            // Extensions of this prefix stop short of `dead`; skip them unless they could still improve.
            const std::uint64_t floor = existence_only_ ? max_n_ - 1 : best_;
            if (dead == 0 || dead - 1 > floor) {
                if (prefix_sink_ && n == prefix_depth_) {
                    prefix_sink_(std::vector<Color>(color_.begin() + 1, color_.begin() + 1 + n));
                } else {
                    dfs(n + 1);
                }
            }
            unassign(n);
            if (full_ || stopped()) return;
        }
    }

    void record(std::uint64_t n) {
        if (n > best_) {
            best_ = n;
            best_coloring_.assign(color_.begin() + 1, color_.begin() + 1 + n);
        }
    }

    // Returns the smallest integer left without any color, or 0.
    std::uint64_t assign(std::uint64_t n, Color c) {
        color_[n] = c;
        if (count_[c]++ == 0) ++used_;
        std::uint64_t dead = 0;
        auto hit = [&](std::uint64_t m) {
            const std::uint64_t z = n + m;
            if (z > max_n_) return;
            if (forbidden_[z * l_ + c]++ == 0) {
                bool all = true;
                for (Color d = 0; d < l_ && all; ++d) all = forbidden_[z * l_ + d] > 0;
                if (all && (dead == 0 || z < dead)) dead = z;
            }
        };
        if (restricted_) {
            for (std::uint32_t m : divisors_[n]) {
                if (color_[m] == c) hit(m);
            }
        } else {
            members_[c].push_back(static_cast<std::uint32_t>(n));
            for (std::uint32_t m : members_[c]) hit(m);
        }
        return dead;
    }

    void unassign(std::uint64_t n) {
        const Color c = color_[n];
        auto unhit = [&](std::uint64_t m) {
            const std::uint64_t z = n + m;
            if (z <= max_n_) --forbidden_[z * l_ + c];
        };
        if (restricted_) {
            for (std::uint32_t m : divisors_[n]) {
                if (color_[m] == c) unhit(m);
            }
        } else {
            for (std::uint32_t m : members_[c]) unhit(m);
            members_[c].pop_back();
        }
        color_[n] = unassigned;
        if (--count_[c] == 0) --used_;
    }

    Color l_;
    bool restricted_;
    std::uint64_t max_n_;
    SharedSearchState& shared_;
    std::vector<Color> color_;
    std::vector<std::uint32_t> forbidden_;
    std::vector<std::vector<std::uint32_t>> members_;
    std::vector<std::vector<std::uint32_t>> divisors_;
    std::vector<std::uint32_t> count_;
    Color used_ = 0;
    std::uint64_t best_ = 0;
    std::vector<Color> best_coloring_;
    std::uint64_t nodes_total_ = 0;
    std::uint64_t nodes_pending_ = 0;
    std::size_t task_ = 0;
    bool full_ = false;
    bool existence_only_ = false;
    std::uint64_t prefix_depth_ = 0;
    std::function<void(const std::vector<Color>&)> prefix_sink_;
};

}  // namespace detail

/// Largest n <= options.max_n for which {1..n} has an l-coloring without a
/// monochromatic forbidden triple, with the lexicographically first such coloring.
inline SearchResult schur_number(Color l, bool restricted, const SearchOptions& options = {}) {
    if (l == 0) throw DomainError("number of colors must be positive");
    if (options.max_n < 1) throw DomainError("max_n must be positive");
    if (options.max_n > UINT32_MAX / 2) throw DomainError("max_n too large");

    detail::SharedSearchState shared;
    shared.budget = options.budget;

    SearchResult result;
    result.l = l;
    result.restricted = restricted;

    const std::uint64_t depth = std::clamp<std::uint64_t>(options.split_depth, 1, options.max_n);
    std::vector<std::vector<Color>> prefixes;
    std::uint64_t best = 0;
    std::vector<Color> best_coloring;
    std::uint64_t nodes = 0;
    {
        detail::ColoringSearch root(l, restricted, options.max_n, shared);
        root.set_existence_only(options.existence_only);
        root.enumerate_prefixes(depth, [&](const std::vector<Color>& p) { prefixes.push_back(p); });
        root.flush();
        best = root.best();
        best_coloring = root.best_coloring();
        nodes = root.nodes();
    }

    struct TaskResult {
        std::uint64_t best = 0;
        std::vector<Color> coloring;
        std::uint64_t nodes = 0;
        bool done = false;
    };
    std::vector<TaskResult> tasks(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= prefixes.size() || shared.abort.load()) return;
            if (shared.full_task.load() < t) {
                tasks[t].done = true;
                continue;
            }
            detail::ColoringSearch engine(l, restricted, options.max_n, shared);
            engine.set_existence_only(options.existence_only);
            engine.search_from(prefixes[t], t);
            engine.flush();
            tasks[t].best = engine.best();
            tasks[t].coloring = engine.best_coloring();
            tasks[t].nodes = engine.nodes();
            tasks[t].done = !shared.abort.load();
        }
    };
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1 || prefixes.size() <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }

    bool complete = !shared.abort.load();
    for (const auto& t : tasks) {
        nodes += t.nodes;
        if (t.best > best) {
            best = t.best;
            best_coloring = t.coloring;
        }
        complete = complete && t.done;
    }

    result.W = best;
    result.witness_coloring = std::move(best_coloring);
    result.nodes = nodes;
    result.cap_reached = best == options.max_n;
    result.budget_exhausted = shared.abort.load();
    if (result.cap_reached || !complete) {
        result.status = SearchStatus::lower_bound;
    } else {
        result.status = SearchStatus::exact;
        result.S = best + 1;
    }
    const std::chrono::duration<double> el = std::chrono::steady_clock::now() - shared.start;
    result.wall_seconds = el.count();
    return result;
}

/// A coloring of {1..n} with no monochromatic forbidden triple, or nullopt after exhausting the search.
inline std::optional<std::vector<Color>> exists_valid_coloring(Color l, std::uint64_t n, bool restricted) {
    if (n < 1) throw DomainError("n must be positive");
    SearchOptions opt;
    opt.max_n = n;
    opt.existence_only = true;
    const SearchResult r = schur_number(l, restricted, opt);
    if (r.W == n) return r.witness_coloring;
    return std::nullopt;
}

}  // namespace schur_div
