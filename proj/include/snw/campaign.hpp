#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "snw/bounds.hpp"
#include "snw/dg_io.hpp"
#include "snw/enumeration.hpp"
#include "snw/json_io.hpp"
#include "snw/seymour.hpp"

namespace snw {

enum class Tier { full, extended, sample };

inline const char* tier_name(Tier t) {
    switch (t) {
        case Tier::full: return "full";
        case Tier::extended: return "extended";
        default: return "sample";
    }
}

struct CampaignConfig {
    std::string command;
    int n = 0;
    Tier tier = Tier::full;
    int samples = 0;
    std::uint64_t seed = 0;
    std::optional<int> m;
    std::optional<Rational> lambda;
    int jobs = 1;
    double p = 0.5;                // sample-tier edge probability
    std::string witness_dir;       // empty = record witnesses without writing files
    const std::atomic<bool>* cancel = nullptr;
};

struct CampaignCounts {
    std::uint64_t graphs_checked = 0;
    std::uint64_t seymour_failures = 0;
    std::uint64_t subset_failures = 0;
    std::uint64_t lemma_violations = 0;
    std::uint64_t bound_violations = 0;

    std::uint64_t failures() const {
        return seymour_failures + subset_failures + lemma_violations + bound_violations;
    }
};

struct WitnessRecord {
    std::optional<std::uint64_t> canonical_index;  // absent beyond the n <= 8 sweep
    std::string file;                              // empty when no witness_dir was given
    std::string dg;
};

struct CampaignReport {
    CampaignConfig config;
    std::string universe;
    CampaignCounts counts;
    std::vector<WitnessRecord> witnesses;
    bool incomplete = false;
    std::int64_t elapsed_ms = 0;

    int exit_code() const { return counts.failures() > 0 ? 2 : 0; }
};

namespace detail {

struct Failure {
    std::string dg;
    std::string kind;  // which counter it increments
};

struct ChunkResult {
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::uint64_t repairs = 0;  // cycle-repair deletions behind sampled m-free graphs
    std::vector<Failure> failures;
};

// Partitions [0, total) into contiguous chunks, processes them on `jobs`
// threads and merges the per-chunk results in chunk order, so counts and
// witness lists are identical for any worker count. A set cancel flag stops
// work at the next index boundary and marks the run incomplete.
template <class PerIndex>
ChunkResult run_chunked(std::uint64_t total, int jobs, const std::atomic<bool>* cancel,
                        bool* incomplete, PerIndex per_index) {
    jobs = std::clamp(jobs, 1, 256);
    const std::uint64_t chunk_target = static_cast<std::uint64_t>(jobs) * 8;
    const std::uint64_t chunk_count = total == 0 ? 0 : std::min<std::uint64_t>(total, chunk_target);
    std::vector<ChunkResult> results(chunk_count);
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<bool> stopped{false};

    const auto worker = [&] {
        while (true) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= chunk_count) return;
            const std::uint64_t lo = total * c / chunk_count;
            const std::uint64_t hi = total * (c + 1) / chunk_count;
            ChunkResult& out = results[c];
            for (std::uint64_t i = lo; i < hi; ++i) {
                if (cancel && cancel->load(std::memory_order_relaxed)) {
                    stopped = true;
                    return;
                }
                per_index(i, out);
                ++out.checked;
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    if (stopped && incomplete) *incomplete = true;
    ChunkResult merged;
    for (auto& r : results) {
        merged.checked += r.checked;
        merged.passed += r.passed;
        merged.repairs += r.repairs;
        merged.failures.insert(merged.failures.end(), r.failures.begin(), r.failures.end());
    }
    return merged;
}

inline void record_witnesses(CampaignReport& report, const std::vector<Failure>& failures) {
    for (const auto& f : failures) {
        const Digraph g = parse_dg(f.dg);
        WitnessRecord w;
        w.dg = f.dg;
        if (g.n() <= 8) w.canonical_index = canonical_form(g);
        const bool dup = std::any_of(report.witnesses.begin(), report.witnesses.end(),
                                     [&](const WitnessRecord& seen) {
                                         return w.canonical_index ? seen.canonical_index == w.canonical_index
                                                                  : seen.dg == w.dg;
                                     });
        if (dup) continue;
        if (!report.config.witness_dir.empty()) {
            std::filesystem::create_directories(report.config.witness_dir);
            const std::string name =
                report.config.command + "-n" + std::to_string(g.n()) + "-" +
                (w.canonical_index ? std::to_string(*w.canonical_index)
                                   : std::to_string(report.witnesses.size())) +
                ".dg";
            w.file = (std::filesystem::path(report.config.witness_dir) / name).string();
            std::ofstream(w.file, std::ios::binary) << f.dg;
        }
        report.witnesses.push_back(std::move(w));
    }
}

inline void bump(CampaignCounts& counts, const std::string& kind) {
    if (kind == "seymour") ++counts.seymour_failures;
    else if (kind == "subset") ++counts.subset_failures;
    else if (kind == "lemma") ++counts.lemma_violations;
    else ++counts.bound_violations;
}

// Shared skeleton: checks one graph per universe index. The graph source is
// decode() for exhaustive tiers and the seeded generator for sample tiers.
template <class MakeGraph, class CheckGraph>
CampaignReport run_universe_campaign(const CampaignConfig& cfg, std::uint64_t total,
                                     std::string universe, MakeGraph make, CheckGraph check) {
    const auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.config = cfg;
    report.universe = std::move(universe);
    auto merged = run_chunked(total, cfg.jobs, cfg.cancel, &report.incomplete,
                              [&](std::uint64_t i, ChunkResult& out) {
                                  const Digraph g = make(i);
                                  check(g, out);
                              });
    report.counts.graphs_checked = merged.checked;
    for (const auto& f : merged.failures) bump(report.counts, f.kind);
    record_witnesses(report, merged.failures);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

inline std::uint64_t tier_universe(const CampaignConfig& cfg, const char* command) {
    switch (cfg.tier) {
        case Tier::full:
            if (cfg.n < 2 || cfg.n > 5)
                fail(errc::universe_too_large,
                     std::string(command) + " tier 'full' covers 2 <= n <= 5");
            return oriented_universe_size(cfg.n);
        case Tier::extended:
            if (cfg.n != 6)
                fail(errc::universe_too_large, std::string(command) + " tier 'extended' is n = 6");
            return oriented_universe_size(cfg.n);
        default:
            if (cfg.n < 2 || cfg.n > 10)
                fail(errc::universe_too_large,
                     std::string(command) + " tier 'sample' covers 2 <= n <= 10");
            if (cfg.samples < 1) fail(errc::universe_too_large, "tier 'sample' needs --samples");
            return static_cast<std::uint64_t>(cfg.samples);
    }
    return 0;  // unreachable
}

inline std::string tier_universe_text(const CampaignConfig& cfg) {
    if (cfg.tier == Tier::sample) {
        char p_text[32];
        std::snprintf(p_text, sizeof(p_text), "%g", cfg.p);
        return std::to_string(cfg.samples) + " random oriented digraphs on " +
               std::to_string(cfg.n) + " vertices (p = " + p_text + ", seed " +
               std::to_string(cfg.seed) + ")";
    }
    return "all 3^" + std::to_string(pair_count(cfg.n)) + " = " +
           std::to_string(oriented_universe_size(cfg.n)) + " labeled oriented digraphs on " +
           std::to_string(cfg.n) + " vertices";
}

inline Digraph tier_graph(const CampaignConfig& cfg, std::uint64_t i) {
    if (cfg.tier == Tier::sample) return random_oriented(cfg.n, cfg.p, cfg.seed + i);
    return decode(cfg.n, i);
}

}  // namespace detail

// Does every graph in the tier contain a Seymour vertex?
inline CampaignReport verify_snc_campaign(const CampaignConfig& cfg) {
    const std::uint64_t total = detail::tier_universe(cfg, "verify-snc");
    return detail::run_universe_campaign(
        cfg, total, detail::tier_universe_text(cfg),
        [&](std::uint64_t i) { return detail::tier_graph(cfg, i); },
        [](const Digraph& g, detail::ChunkResult& out) {
            if (seymour_vertices(g).none()) out.failures.push_back({write_dg(g), "seymour"});
        });
}

// Does every graph in the tier contain a non-empty proper subset S with
// d1+(S) <= d2+(S)? Also re-verifies, through the set machinery, that a
// Seymour vertex always yields a singleton witness.
inline CampaignReport verify_subset_campaign(const CampaignConfig& cfg) {
    const std::uint64_t total = detail::tier_universe(cfg, "verify-subset");
    return detail::run_universe_campaign(
        cfg, total, detail::tier_universe_text(cfg),
        [&](std::uint64_t i) { return detail::tier_graph(cfg, i); },
        [](const Digraph& g, detail::ChunkResult& out) {
            if (!subset_seymour_search(g, SearchMode::exact)) {
                out.failures.push_back({write_dg(g), "subset"});
                return;
            }
            const VertexSet sv = seymour_vertices(g);
            if (!sv.none()) {
                const std::uint64_t single = bit(sv.members().front());
                if (std::popcount(set_first_out_mask(g, single)) >
                    std::popcount(set_second_out_mask(g, single)))
                    out.failures.push_back({write_dg(g), "subset"});
            }
        });
}

// Does every m-free graph contain a vertex with d2 >= (root - guard) * d1?
// Exhaustive over n in [2, 5] (girth-filtered), then `samples` seeded random
// repairs at cfg.n. The guard band absorbs the root's numerical error: the
// root is known to 1e-12, so backing off 1e-9 can only weaken the check by
// an amount no integer ratio can straddle at desk scale.
inline CampaignReport verify_mfree_campaign(const CampaignConfig& cfg) {
    if (!cfg.m || *cfg.m < 2) fail(errc::bad_m, "verify-mfree needs m >= 2");
    const int m = *cfg.m;
    const double guard_lambda = snc_bound_root(m) - 1e-9;
    const auto start = std::chrono::steady_clock::now();

    CampaignReport report;
    report.config = cfg;
    report.universe = "every " + std::to_string(m) + "-free labeled oriented digraph on 2 <= n <= 5, plus " +
                      std::to_string(cfg.samples) + " seeded random " + std::to_string(m) +
                      "-free digraphs on " + std::to_string(cfg.n) + " vertices";

    const auto check = [&](const Digraph& g, detail::ChunkResult& out) {
        bool witness_vertex = false;
        for (int v = 0; v < g.n() && !witness_vertex; ++v) {
            const double d1 = g.out_degree(v);
            const double d2 = std::popcount(second_out_mask(g, v));
            if (d2 >= guard_lambda * d1) witness_vertex = true;
        }
        if (!witness_vertex) out.failures.push_back({write_dg(g), "bound"});
    };

    std::vector<detail::Failure> failures;
    for (int n = 2; n <= 5 && !report.incomplete; ++n) {
        auto merged = detail::run_chunked(
            oriented_universe_size(n), cfg.jobs, cfg.cancel, &report.incomplete,
            [&](std::uint64_t i, detail::ChunkResult& out) {
                const Digraph g = decode(n, i);
                if (!is_m_free(g, m)) return;
                ++out.passed;
                check(g, out);
            });
        report.counts.graphs_checked += merged.passed;
        failures.insert(failures.end(), merged.failures.begin(), merged.failures.end());
    }
    if (!report.incomplete && cfg.samples > 0) {
        auto merged = detail::run_chunked(
            static_cast<std::uint64_t>(cfg.samples), cfg.jobs, cfg.cancel, &report.incomplete,
            [&](std::uint64_t i, detail::ChunkResult& out) {
                const MFreeSample sample = random_m_free_sample(cfg.n, cfg.p, m, cfg.seed + i);
                out.repairs += static_cast<std::uint64_t>(sample.repair_deletions);
                check(sample.graph, out);
            });
        report.counts.graphs_checked += merged.checked;
        failures.insert(failures.end(), merged.failures.begin(), merged.failures.end());
        // sampling is repair-biased, so the report discloses how much repair happened
        report.universe += " [" + std::to_string(merged.repairs) + " cycle-repair deletions]";
    }
    for (const auto& f : failures) detail::bump(report.counts, f.kind);
    detail::record_witnesses(report, failures);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

inline json to_json(const CampaignReport& r) {
    json j;
    j["command"] = r.config.command;
    json cfg;
    cfg["n"] = r.config.n;
    cfg["tier"] = tier_name(r.config.tier);
    cfg["samples"] = r.config.samples;
    cfg["seed"] = r.config.seed;
    cfg["m"] = r.config.m ? json(*r.config.m) : json(nullptr);
    cfg["lambda"] = r.config.lambda
                        ? json{{"num", r.config.lambda->num()}, {"den", r.config.lambda->den()}}
                        : json(nullptr);
    cfg["jobs"] = r.config.jobs;
    j["config"] = cfg;
    j["universe"] = r.universe;
    j["counts"] = {{"graphs_checked", r.counts.graphs_checked},
                   {"seymour_failures", r.counts.seymour_failures},
                   {"subset_failures", r.counts.subset_failures},
                   {"lemma_violations", r.counts.lemma_violations},
                   {"bound_violations", r.counts.bound_violations}};
    j["witnesses"] = json::array();
    for (const auto& w : r.witnesses)
        j["witnesses"].push_back(
            {{"canonical_index", w.canonical_index ? json(*w.canonical_index) : json(nullptr)},
             {"file", w.file}});
    j["incomplete"] = r.incomplete;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

}  // namespace snw
