#pragma once

#include "schur_div/errors.hpp"
#include "schur_div/schur_search.hpp"

#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace schur_div {

/// Persistent store of schur-search results, one best entry per (l, restricted).
///
/// File format (version 1):
///   {"version":1,"entries":[{"l":2,"restricted":true,"n":11,"coloring":[...],
///                            "status":"exact","timestamp":"2026-01-01T00:00:00Z"}]}
class SearchCache {
public:
    static constexpr int version = 1;

    struct Entry {
        Color l = 0;
        bool restricted = false;
        std::uint64_t n = 0;
        std::vector<Color> coloring;
        SearchStatus status = SearchStatus::lower_bound;
        std::string timestamp;
    };

    /// A missing file yields an empty cache. Entries whose coloring fails revalidation are dropped.
    static SearchCache load(const std::string& path) {
        SearchCache cache;
        std::ifstream in(path);
        if (!in) return cache;
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw Error("cache '" + path + "' is not valid JSON: " + e.what());
        }
        if (!doc.is_object() || doc.value("version", 0) != version) {
            throw Error("cache '" + path + "' has an unsupported version");
        }
        try {
            for (const auto& e : doc.at("entries")) {
                Entry entry;
                entry.l = e.at("l").get<Color>();
                entry.restricted = e.at("restricted").get<bool>();
                entry.n = e.at("n").get<std::uint64_t>();
                entry.coloring = e.at("coloring").get<std::vector<Color>>();
                entry.status = e.at("status").get<std::string>() == "exact" ? SearchStatus::exact
                                                                             : SearchStatus::lower_bound;
                entry.timestamp = e.value("timestamp", "");
                if (valid(entry)) cache.merge(std::move(entry));
            }
        } catch (const nlohmann::json::exception& e) {
            throw Error("cache '" + path + "' is malformed: " + e.what());
        }
        return cache;
    }

    void save(const std::string& path) const {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : entries_) {
            entries.push_back({{"l", e.l},
                               {"restricted", e.restricted},
                               {"n", e.n},
                               {"coloring", e.coloring},
                               {"status", to_string(e.status)},
                               {"timestamp", e.timestamp}});
        }
        std::ofstream out(path, std::ios::trunc);
        if (!out) throw Error("cannot write cache '" + path + "'");
        out << nlohmann::json{{"version", version}, {"entries", entries}}.dump() << '\n';
    }

    std::optional<Entry> lookup(Color l, bool restricted) const {
        for (const auto& e : entries_) {
            if (e.l == l && e.restricted == restricted) return e;
        }
        return std::nullopt;
    }

    /// Keeps the better of the stored and the new entry. Returns true if the cache changed.
    bool merge(Entry entry) {
        for (auto& e : entries_) {
            if (e.l != entry.l || e.restricted != entry.restricted) continue;
            if (e.status == SearchStatus::exact) return false;
            if (entry.status == SearchStatus::exact || entry.n > e.n) {
                e = std::move(entry);
                return true;
            }
            return false;
        }
        entries_.push_back(std::move(entry));
        return true;
    }

    bool record(const SearchResult& r) {
        return merge(Entry{r.l, r.restricted, r.W, r.witness_coloring, r.status, now_utc()});
    }

    const std::vector<Entry>& entries() const noexcept { return entries_; }

private:
    static bool valid(const Entry& e) {
        if (e.coloring.size() != e.n || e.l == 0) return false;
        for (Color c : e.coloring) {
            if (c >= e.l) return false;
        }
        return !find_monochromatic(e.coloring, e.restricted);
    }

    static std::string now_utc() {
        const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&t, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    std::vector<Entry> entries_;
};

}  // namespace schur_div
