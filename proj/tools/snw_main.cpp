// snw: verification workbench for the second neighborhood conjecture, its
// subset form, and the m-free degree-ratio bounds.
//
// Exit codes: 0 = all checks passed, 2 = a mathematical witness was found
// (the interesting outcome), 1 = operational error.

#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "snw/campaign.hpp"
#include "snw/dg_io.hpp"
#include "snw/json_io.hpp"
#include "snw/reduction.hpp"

namespace {

std::atomic<bool> g_cancel{false};

void on_interrupt(int) { g_cancel.store(true); }

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) snw::fail(snw::errc::parse_error, "cannot write '" + path + "'");
    out << text;
}

snw::Tier parse_tier(const std::string& name) {
    if (name == "full") return snw::Tier::full;
    if (name == "extended") return snw::Tier::extended;
    if (name == "sample") return snw::Tier::sample;
    snw::fail(snw::errc::parse_error, "unknown tier '" + name + "'");
}

int emit_report(const snw::CampaignReport& report, const std::string& out_path) {
    write_text(out_path, snw::to_json(report).dump(2) + "\n");
    return report.exit_code();
}

struct VerifyArgs {
    int n = 0;
    std::string tier = "full";
    int samples = 0;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string out;
    std::string witness_dir = ".";
};

void add_verify_options(CLI::App* cmd, VerifyArgs& args) {
    cmd->add_option("--n", args.n, "vertex count")->required();
    cmd->add_option("--tier", args.tier, "full|extended|sample")
        ->check(CLI::IsMember({"full", "extended", "sample"}));
    cmd->add_option("--samples", args.samples, "sample count (tier=sample)");
    cmd->add_option("--seed", args.seed, "PRNG seed");
    cmd->add_option("--jobs", args.jobs, "worker threads")->envname("SNW_JOBS");
    cmd->add_option("--out", args.out, "report path (default: stdout)");
    cmd->add_option("--witness-dir", args.witness_dir, "directory for witness DG files");
}

snw::CampaignConfig to_config(const VerifyArgs& args, const std::string& command) {
    snw::CampaignConfig cfg;
    cfg.command = command;
    cfg.n = args.n;
    cfg.tier = parse_tier(args.tier);
    cfg.samples = args.samples;
    cfg.seed = args.seed;
    cfg.jobs = std::max(1, args.jobs);
    cfg.witness_dir = args.witness_dir;
    cfg.cancel = &g_cancel;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"second neighborhood conjecture workbench"};
    app.require_subcommand(1);
    std::signal(SIGINT, on_interrupt);

    // bounds
    int m_max = 0;
    double tol = 1e-12;
    std::string bounds_format = "csv";
    std::string bounds_out;
    auto* bounds_cmd = app.add_subcommand("bounds", "lower-bound table for lambda_m");
    bounds_cmd->add_option("--m-max", m_max, "largest m in the table")->required();
    bounds_cmd->add_option("--tol", tol, "bisection tolerance");
    bounds_cmd->add_option("--format", bounds_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    bounds_cmd->add_option("--out", bounds_out, "output path (default: stdout)");

    // verify-snc / verify-subset
    VerifyArgs snc_args;
    auto* snc_cmd = app.add_subcommand("verify-snc", "Seymour vertex on every graph in a tier");
    add_verify_options(snc_cmd, snc_args);
    VerifyArgs subset_args;
    auto* subset_cmd =
        app.add_subcommand("verify-subset", "subset witness on every graph in a tier");
    add_verify_options(subset_cmd, subset_args);

    // verify-mfree
    VerifyArgs mfree_args;
    mfree_args.n = 12;
    mfree_args.samples = 1000;
    int mfree_m = 0;
    auto* mfree_cmd =
        app.add_subcommand("verify-mfree", "degree-ratio bound on m-free digraphs");
    mfree_cmd->add_option("--m", mfree_m, "cycle-freeness bound")->required();
    mfree_cmd->add_option("--n", mfree_args.n, "vertex count for sampled graphs");
    mfree_cmd->add_option("--samples", mfree_args.samples, "random m-free samples");
    mfree_cmd->add_option("--seed", mfree_args.seed, "PRNG seed");
    mfree_cmd->add_option("--jobs", mfree_args.jobs, "worker threads")->envname("SNW_JOBS");
    mfree_cmd->add_option("--out", mfree_args.out, "report path (default: stdout)");
    mfree_cmd->add_option("--witness-dir", mfree_args.witness_dir, "directory for witness DG files");

    // reduce
    std::string reduce_in, reduce_lambda, reduce_out, reduce_trace;
    auto* reduce_cmd =
        app.add_subcommand("reduce", "minimal lambda-counterexample reduction + subset check");
    reduce_cmd->add_option("--in", reduce_in, "input DG file")->required();
    reduce_cmd->add_option("--lambda", reduce_lambda, "lambda as exact rational p/q")->required();
    reduce_cmd->add_option("--out", reduce_out, "reduced DG path (default: <in>.reduced.dg)");
    reduce_cmd->add_option("--trace", reduce_trace, "reduction trace JSON path");

    // analyze
    std::string analyze_in, analyze_out;
    auto* analyze_cmd = app.add_subcommand("analyze", "full neighborhood report for one digraph");
    analyze_cmd->add_option("--in", analyze_in, "input DG file")->required();
    analyze_cmd->add_option("--out", analyze_out, "report path (default: stdout)");

    // enumerate
    int enum_n = 0;
    int enum_m = 0;
    std::string enum_filter, enum_out;
    auto* enum_cmd = app.add_subcommand("enumerate", "sweep a labeled-graph universe");
    enum_cmd->add_option("--n", enum_n, "vertex count")->required();
    enum_cmd->add_option("--filter", enum_filter,
                         "comma list of tournament,in-regular,strongly-connected,m-free");
    enum_cmd->add_option("--m", enum_m, "m for the m-free filter");
    enum_cmd->add_option("--out", enum_out, "directory for <n>-<index>.dg files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (bounds_cmd->parsed()) {
            const auto rows = snw::bounds_table(m_max, tol);
            write_text(bounds_out, bounds_format == "json"
                                       ? snw::bounds_document(rows).dump(2) + "\n"
                                       : snw::bounds_csv(rows));
            return 0;
        }
        if (snc_cmd->parsed())
            return emit_report(snw::verify_snc_campaign(to_config(snc_args, "verify-snc")),
                               snc_args.out);
        if (subset_cmd->parsed())
            return emit_report(snw::verify_subset_campaign(to_config(subset_args, "verify-subset")),
                               subset_args.out);
        if (mfree_cmd->parsed()) {
            auto cfg = to_config(mfree_args, "verify-mfree");
            cfg.tier = snw::Tier::sample;
            cfg.m = mfree_m;
            return emit_report(snw::verify_mfree_campaign(cfg), mfree_args.out);
        }
        if (reduce_cmd->parsed()) {
            const snw::Digraph input = snw::load_dg(reduce_in);
            const snw::Rational lambda = snw::Rational::parse(reduce_lambda);
            auto result = snw::minimal_reduce(input, lambda);
            snw::save_dg(result.graph,
                         reduce_out.empty() ? reduce_in + ".reduced.dg" : reduce_out);
            if (!reduce_trace.empty())
                write_text(reduce_trace, snw::to_json(result.trace).dump(2) + "\n");
            const auto violation = snw::subset_inequality_check(result.graph, lambda);
            if (violation) {
                std::cout << "VIOLATION S = " << snw::to_json(*violation).dump() << "\n";
                return 2;
            }
            std::cout << "PASS\n";
            return 0;
        }
        if (analyze_cmd->parsed()) {
            const snw::SeymourReport report = snw::analyze(snw::load_dg(analyze_in));
            write_text(analyze_out, snw::to_json(report).dump(2) + "\n");
            return 0;
        }
        if (enum_cmd->parsed()) {
            snw::GeneratorConfig cfg;
            cfg.n = enum_n;
            std::stringstream filters(enum_filter);
            std::string item;
            while (std::getline(filters, item, ',')) {
                if (item.empty()) continue;
                if (item == "tournament") cfg.filter.tournament = true;
                else if (item == "in-regular") cfg.filter.in_regular = true;
                else if (item == "strongly-connected") cfg.filter.strongly_connected = true;
                else if (item == "m-free") cfg.filter.m_free = enum_m;
                else snw::fail(snw::errc::parse_error, "unknown filter '" + item + "'");
            }
            if (cfg.filter.m_free && *cfg.filter.m_free < 2)
                snw::fail(snw::errc::bad_m, "m-free filter needs --m >= 2");
            if (!enum_out.empty()) std::filesystem::create_directories(enum_out);
            const auto stats = snw::enumerate(cfg, [&](std::uint64_t index, const snw::Digraph& g) {
                if (enum_out.empty()) return;
                snw::save_dg(g, (std::filesystem::path(enum_out) /
                                 (std::to_string(cfg.n) + "-" + std::to_string(index) + ".dg"))
                                    .string());
            });
            snw::json j;
            j["universe"] = stats.universe;
            j["visited"] = stats.visited;
            j["passed"] = stats.passed;
            j["elapsed_ms"] = stats.elapsed_ms;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
    } catch (const snw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
