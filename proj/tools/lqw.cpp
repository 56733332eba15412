// Command-line front end: sweep, trace, vicinity, verify.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lqw/experiment.hpp"

namespace {

lqw::Cell to_cell(const std::vector<int>& xy) { return {xy.at(0), xy.at(1)}; }

int run_sweep_cmd(const lqw::SweepConfig& cfg, const std::string& out_csv,
                  const std::string& out_plot) {
    const lqw::SweepResult result = lqw::run_sweep(cfg);
    for (const auto& f : result.failures) {
        std::cerr << "sweep cell side=" << f.side << " preset=" << lqw::to_string(f.preset)
                  << " failed: " << f.message << '\n';
    }
    if (result.records.empty()) {
        std::cerr << "error: no sweep cell succeeded\n";
        return 1;
    }
    if (out_csv.empty() || out_csv == "-")
        lqw::write_sweep_csv(result.records, std::cout);
    else
        lqw::emit_csv(result.records, out_csv);
    if (!out_plot.empty()) lqw::emit_plot(result.records, out_plot);
    return result.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lackadaisical quantum walk search on a torus with a clustered marked block"};
    app.set_config("--config", "", "Key=value config file; command-line flags take precedence");
    app.require_subcommand(1);

    std::string marked_coin = "grover";
    app.add_option("--marked-coin", marked_coin, "Coin on marked cells: grover (-D) or identity (-I)")
        ->check(CLI::IsMember({"grover", "identity"}))
        ->capture_default_str();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Peak probability and steps vs grid side per preset");
    std::vector<int> sides = lqw::SweepConfig::default_sides();
    int sweep_k = 9;
    std::vector<std::string> presets = {"zero", "wong", "quarter", "proposed"};
    std::vector<int> sweep_anchor = {0, 0};
    int sweep_max_steps = 0;
    std::string out_csv, out_plot;
    int jobs = 0;
    sweep->add_option("--sides", sides, "Grid sides")->delimiter(',')->capture_default_str();
    sweep->add_option("--k", sweep_k, "Marked cells (perfect square)")->capture_default_str();
    sweep->add_option("--presets", presets, "Weight presets: zero, wong, quarter, proposed")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--anchor", sweep_anchor, "Cluster lower-left cell x,y")
        ->delimiter(',')
        ->expected(2)
        ->capture_default_str();
    sweep->add_option("--max-steps", sweep_max_steps, "Step window (0 = ceil(2 sqrt(N ln N)))")
        ->check(CLI::NonNegativeNumber);
    sweep->add_option("--out-csv", out_csv, "CSV output path (default stdout)");
    sweep->add_option("--out-plot", out_plot, "SVG plot output path");
    sweep->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)")
        ->check(CLI::NonNegativeNumber);

    // trace
    auto* trace = app.add_subcommand("trace", "Per-step marked probability for one instance");
    int trace_side = 20, trace_k = 9, trace_max_steps = 0, stride = 1;
    std::string trace_preset = "proposed", backend = "serial", trace_csv, snapshot;
    std::optional<double> trace_weight;
    std::vector<int> trace_anchor = {0, 0};
    trace->add_option("--side", trace_side, "Grid side")->capture_default_str();
    trace->add_option("--k", trace_k, "Marked cells (perfect square)")->capture_default_str();
    trace->add_option("--anchor", trace_anchor, "Cluster lower-left cell x,y")
        ->delimiter(',')
        ->expected(2);
    trace->add_option("--preset", trace_preset, "Weight preset")->capture_default_str();
    trace->add_option("--loop-weight", trace_weight, "Explicit self-loop weight (overrides preset)")
        ->check(CLI::NonNegativeNumber);
    trace->add_option("--max-steps", trace_max_steps, "Steps (0 = ceil(2 sqrt(N ln N)))")
        ->check(CLI::NonNegativeNumber);
    trace->add_option("--stride", stride, "Record every n-th step")->check(CLI::PositiveNumber);
    trace->add_option("--backend", backend, "Kernel backend: serial or openmp")
        ->check(CLI::IsMember({"serial", "openmp"}));
    trace->add_option("--out-csv", trace_csv, "CSV output path (default stdout)");
    trace->add_option("--snapshot", snapshot, "Write the final state to this file");

    // vicinity
    auto* vicinity = app.add_subcommand("vicinity", "One quantum run, then classical vicinity search");
    lqw::VicinityDemoConfig vcfg;
    std::string vicinity_preset = "proposed", query_log;
    std::vector<int> vicinity_anchor = {0, 0};
    vicinity->add_option("--side", vcfg.side, "Grid side")->capture_default_str();
    vicinity->add_option("--k", vcfg.k, "Marked cells (perfect square)")->capture_default_str();
    vicinity->add_option("--anchor", vicinity_anchor, "Cluster lower-left cell x,y")
        ->delimiter(',')
        ->expected(2);
    vicinity->add_option("--preset", vicinity_preset, "Weight preset")->capture_default_str();
    vicinity->add_option("--trials", vcfg.trials, "Classical searches to average")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    vicinity->add_option("--seed", vcfg.seed, "PRNG seed")->capture_default_str();
    vicinity->add_option("--query-log", query_log, "Write the first search's queries as CSV");

    auto* verify = app.add_subcommand("verify", "Oracle equivalence and invariant checks");

    CLI11_PARSE(app, argc, argv);

    try {
        const lqw::MarkedCoin coin = lqw::parse_marked_coin(marked_coin);

        if (*sweep) {
            lqw::SweepConfig cfg;
            cfg.sides = sides;
            cfg.k = sweep_k;
            cfg.presets.clear();
            for (const auto& p : presets) cfg.presets.push_back(lqw::parse_preset(p));
            cfg.anchor = to_cell(sweep_anchor);
            if (sweep_max_steps > 0) cfg.max_steps = sweep_max_steps;
            cfg.marked_coin = coin;
            cfg.jobs = jobs;
            return run_sweep_cmd(cfg, out_csv, out_plot);
        }

        if (*trace) {
            const lqw::GridGeometry g(trace_side);
            const auto region = lqw::make_cluster(g, trace_k, to_cell(trace_anchor));
            const double l = trace_weight.value_or(
                lqw::preset_weight(lqw::parse_preset(trace_preset), g, trace_k));
            lqw::RunConfig run{region,
                               l,
                               trace_max_steps > 0 ? trace_max_steps : lqw::default_max_steps(g),
                               stride,
                               coin,
                               lqw::parse_backend(backend)};
            const auto result = lqw::evolve(run);
            if (trace_csv.empty() || trace_csv == "-") {
                lqw::write_trace_csv(result, std::cout);
            } else {
                std::ofstream out(trace_csv);
                if (!out) throw std::runtime_error("cannot open " + trace_csv + " for writing");
                lqw::write_trace_csv(result, out);
                if (!out) throw std::runtime_error("error writing " + trace_csv);
            }
            std::fprintf(stderr, "loop_weight %.17g peak_step %d peak_probability %.17g\n", l,
                         result.peak_step, result.peak_probability);
            if (!snapshot.empty())
                lqw::write_snapshot(lqw::evolve_state(run, run.max_steps), snapshot);
            return 0;
        }

        if (*vicinity) {
            vcfg.preset = lqw::parse_preset(vicinity_preset);
            vcfg.anchor = to_cell(vicinity_anchor);
            vcfg.marked_coin = coin;
            const auto report = lqw::run_vicinity_demo(vcfg);
            lqw::write_vicinity_report(report, std::cout);
            if (!query_log.empty()) {
                std::ofstream out(query_log);
                if (!out) throw std::runtime_error("cannot open " + query_log + " for writing");
                lqw::write_query_log_csv(report.first_log, out);
            }
            return report.recovered_ok == report.trials ? 0 : 1;
        }

        if (*verify) {
            bool all = true;
            for (const auto& r : lqw::run_verification()) {
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
                if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
                std::cout << '\n';
                all = all && r.passed;
            }
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
