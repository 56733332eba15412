// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any gating
// criterion fails. Criterion 9 is informational and never gates.

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lqw/experiment.hpp"
#include "lqw/reference_oracle.hpp"

using namespace lqw;

namespace {

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail, bool gating = true) {
    const char* tag = ok ? "PASS" : (gating ? "FAIL" : "INFO");
    std::printf("[%s] C%-2d %s\n       %s\n", tag, id, title, detail.c_str());
    std::fflush(stdout);
    if (!ok && gating) ++failures;
}

std::string num(double v, int precision = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

void oracle_equivalence() {
    double worst = 0.0;
    int cases = 0;
    for (int side : {2, 3, 4}) {
        const GridGeometry g(side);
        const double n = static_cast<double>(g.cell_count());
        for (int k : {1, 4, 9}) {
            const int root = static_cast<int>(std::lround(std::sqrt(k)));
            if (root > side) continue;
            std::vector<double> weights = {0.0, 4.0 / n};
            if (k % 2) weights.push_back(preset_weight(WeightPreset::Proposed, g, k));
            for (int ay = 0; ay + root <= side; ++ay)
                for (int ax = 0; ax + root <= side; ++ax)
                    for (double l : weights) {
                        const auto region = make_cluster(g, k, {ax, ay});
                        const auto u = reference::build_step_matrix(g, region, l);
                        auto dense = reference::dense_uniform_vector(g, l);
                        auto state = new_uniform_state(g, l);
                        const StepConfig step(region, l);
                        for (int t = 1; t <= 25; ++t) {
                            walk_step(state, step);
                            dense = reference::dense_evolve(u, std::move(dense), 1);
                            worst = std::max(worst, max_abs_difference(state.amplitudes(), dense));
                        }
                        ++cases;
                    }
        }
    }
    report(1, "engine matches dense oracle within 1e-12 (t <= 25)", worst <= 1e-12,
           std::to_string(cases) + " configurations, max |diff| = " + num(worst, 3));
}

void unitarity_and_stationarity() {
    const GridGeometry g(30);
    const double l = preset_weight(WeightPreset::Proposed, g, 9);
    auto state = new_uniform_state(g, l);
    const StepConfig step(make_cluster(g, 9, {0, 0}), l);
    for (int t = 0; t < 10000; ++t) walk_step(state, step);
    const double drift = std::abs(total_norm(state) - 1.0);
    double stationary = 0.0;
    for (int side : {10, 30})
        for (double w : {0.0, 0.01})
            stationary = std::max(stationary, stationarity_deviation(GridGeometry(side), w, 100));
    report(2, "norm drift <= 1e-10 over 1e4 steps; unmarked drift <= 1e-12 over 100 steps",
           drift <= 1e-10 && stationary <= 1e-12,
           "norm drift = " + num(drift, 3) + ", stationarity = " + num(stationary, 3));
}

using Table = std::map<std::pair<int, WeightPreset>, SweepRecord>;

Table full_sweep() {
    SweepConfig cfg;
    cfg.sides.clear();
    for (int s = 8; s <= 30; s += 2) cfg.sides.push_back(s);
    cfg.k = 9;
    const auto result = run_sweep(cfg);
    Table t;
    for (const auto& r : result.records) t[{r.side, r.preset}] = r;
    for (const auto& f : result.failures)
        std::printf("sweep cell side=%d preset=%s failed: %s\n", f.side,
                    std::string(to_string(f.preset)).c_str(), f.message.c_str());
    return t;
}

void print_table(const Table& t) {
    std::printf("k = 9, anchor (0,0), peak probability / peak step\n");
    std::printf("side        zero          wong       quarter      proposed\n");
    for (int s = 8; s <= 30; s += 2) {
        std::printf("%4d", s);
        for (auto p : {WeightPreset::Zero, WeightPreset::WongSingle, WeightPreset::QuarterInverse,
                       WeightPreset::Proposed}) {
            auto it = t.find({s, p});
            if (it == t.end())
                std::printf("  %12s", "-");
            else
                std::printf("  %6.4f/%-5d", it->second.peak_probability, it->second.peak_step);
        }
        std::printf("\n");
    }
}

void proposed_probability(const Table& t) {
    bool ok = true;
    std::string detail;
    for (int s : {10, 12, 14}) {
        const double p = t.at({s, WeightPreset::Proposed}).peak_probability;
        const bool in = p >= 0.70 && p <= 0.92;
        ok = ok && in;
        detail += "side " + std::to_string(s) + ": " + num(p) + (in ? "" : " (outside [0.70,0.92])") + "; ";
    }
    for (int s = 20; s <= 30; s += 2) {
        const double p = t.at({s, WeightPreset::Proposed}).peak_probability;
        ok = ok && p >= 0.90;
        detail += "side " + std::to_string(s) + ": " + num(p) + (p >= 0.90 ? "" : " (< 0.90)") + "; ";
    }
    report(3, "proposed weight: [0.70,0.92] at sides 10-14, >= 0.90 at sides 20-30", ok, detail);
}

void improvement_and_steps(const Table& t) {
    std::vector<SweepRecord> records;
    for (const auto& [key, r] : t)
        if (key.first >= 16 && (key.second == WeightPreset::Zero || key.second == WeightPreset::Proposed))
            records.push_back(r);
    const auto rows = compare_presets(records, WeightPreset::Zero, WeightPreset::Proposed);
    bool prob_ok = true, step_ok = true;
    std::string prob_detail, step_detail;
    for (const auto& row : rows) {
        prob_ok = prob_ok && row.delta_probability >= 0.15;
        step_ok = step_ok && row.delta_steps < 0;
        prob_detail += std::to_string(row.side) + ": +" + num(row.delta_probability, 3) + "; ";
        step_detail += std::to_string(row.side) + ": " +
                       std::to_string(t.at({row.side, WeightPreset::Proposed}).peak_step) + " vs " +
                       std::to_string(t.at({row.side, WeightPreset::Zero}).peak_step) + "; ";
    }
    report(4, "peak(proposed) - peak(zero) >= 0.15 at sides 16-30", prob_ok, prob_detail);
    report(5, "peak_step(proposed) < peak_step(zero) at sides 16-30", step_ok,
           "proposed vs zero steps, " + step_detail);
}

void quarter_inverse(const Table& t) {
    bool ok = true;
    std::string detail;
    for (int s = 14; s <= 30; s += 2) {
        const double p = t.at({s, WeightPreset::QuarterInverse}).peak_probability;
        ok = ok && p >= 0.77 && p <= 0.93;
        detail += std::to_string(s) + ": " + num(p) + "; ";
    }
    report(6, "1/(4N) weight: peak in [0.77,0.93] at sides 14-30", ok, detail);
}

void single_marked() {
    const GridGeometry g(10);
    RunConfig run{make_cluster(g, 1, {0, 0}), 4.0 / 100.0, default_max_steps(g)};
    const auto trace = evolve_with_window(run);
    report(7, "single marked cell, side 10, l = 4/N: peak >= 0.90", trace.peak_probability >= 0.90,
           "peak " + num(trace.peak_probability) + " at step " + std::to_string(trace.peak_step));
}

void vicinity_query_cost() {
    bool ok = true;
    std::string detail;
    std::vector<double> xs, ys;
    for (int k : {1, 9, 25, 49}) {
        const int root = *exact_sqrt(k);
        // Independent oracle: average of (a+1)+(b+1) over all offsets.
        long long total = 0;
        for (int a = 0; a < root; ++a)
            for (int b = 0; b < root; ++b) total += a + b + 2;
        const double enumerated = static_cast<double>(total) / k;
        const double exact = exact_expected_queries(k);
        const auto mc = monte_carlo_queries(k, 100000, 20240601);
        const bool mc_ok = k == 1 ? mc.mean == 2.0 : std::abs(mc.mean - exact) <= 3.0 * mc.stderr_mean;

        bool corners_ok = true;
        const GridGeometry g(root + 4);
        for (Cell anchor : {Cell{0, 0}, Cell{2, 1}, Cell{4, 4}}) {
            const auto region = make_cluster(g, k, anchor);
            const MarkOracle oracle = [&region](Cell c) { return region.is_marked(c); };
            for (const Cell start : region.cells()) {
                const auto log = locate_cluster(oracle, start, g, k);
                corners_ok = corners_ok && log.corner == anchor && log.recovered == region.cells() &&
                             log.query_count() == (start.x - anchor.x + 1) + (start.y - anchor.y + 1);
            }
        }
        ok = ok && exact == root + 1.0 && enumerated == exact && mc_ok && corners_ok;
        detail += "k=" + std::to_string(k) + ": exact " + num(exact) + ", MC " + num(mc.mean, 6) +
                  " +/- " + num(mc.stderr_mean, 2) + (corners_ok ? "" : " corner FAIL") + "; ";
        xs.push_back(root);
        ys.push_back(exact);
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
    mx /= xs.size();
    my /= ys.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) sxy += (xs[i] - mx) * (ys[i] - my), sxx += (xs[i] - mx) * (xs[i] - mx);
    const double slope = sxy / sxx;
    ok = ok && std::abs(slope - 1.0) <= 0.01;
    report(8, "vicinity search: E[queries] = sqrt(k)+1, MC within 3 sigma, corner from every start",
           ok, detail + "slope vs sqrt(k) = " + num(slope, 6));
}

void even_k_failure() {
    const GridGeometry g(16);
    RunConfig run{make_cluster(g, 4, {0, 0}), 0.0, default_max_steps(g)};
    const auto trace = evolve_with_window(run);
    const bool stays_low = trace.peak_probability < 4.0 * trace.initial_probability;
    report(9, "even k (side 16, k 4, l 0): does the walk fail to amplify? (informational)", stays_low,
           "peak " + num(trace.peak_probability) + " at step " + std::to_string(trace.peak_step) +
               ", initial " + num(trace.initial_probability) +
               (stays_low ? " -> stays below 4x initial (walk fails)" : " -> exceeds 4x initial"),
           false);
}

void determinism() {
    SweepConfig cfg;
    cfg.sides = {8, 11, 14};
    cfg.jobs = 1;
    std::ostringstream a, b;
    write_sweep_csv(run_sweep(cfg).records, a);
    cfg.jobs = 3;
    const auto records = run_sweep(cfg).records;
    write_sweep_csv(records, b);
    std::istringstream in(b.str());
    const bool round_trip = parse_sweep_csv(in) == records;
    report(10, "sweep CSV byte-identical across runs and round-trips through the parser",
           a.str() == b.str() && round_trip,
           std::string("identical: ") + (a.str() == b.str() ? "yes" : "no") +
               ", round-trip: " + (round_trip ? "yes" : "no"));
}

}  // namespace

int main() {
    oracle_equivalence();
    unitarity_and_stationarity();
    const Table table = full_sweep();
    print_table(table);
    proposed_probability(table);
    improvement_and_steps(table);
    quarter_inverse(table);
    single_marked();
    vicinity_query_cost();
    even_k_failure();
    determinism();
    std::printf("%d gating criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
