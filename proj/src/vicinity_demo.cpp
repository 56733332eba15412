#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include "lqw/experiment.hpp"

namespace lqw {

VicinityReport run_vicinity_demo(const VicinityDemoConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    const GridGeometry g(config.side);
    const MarkedRegion region = make_cluster(g, config.k, config.anchor);

    VicinityReport report;
    report.loop_weight = config.loop_weight.value_or(preset_weight(config.preset, g, config.k));
    RunConfig run{region, report.loop_weight, default_max_steps(g), 1, config.marked_coin,
                  Backend::Serial};
    run.record_stride = run.max_steps;
    const EvolutionTrace trace = evolve_with_window(run);
    report.quantum_steps = trace.peak_step;
    report.peak_probability = trace.peak_probability;
    report.initial_probability = trace.initial_probability;
    report.unreliable = trace.peak_probability < trace.initial_probability;

    const WalkState state = evolve_state(run, trace.peak_step);
    const CellDistribution dist = position_distribution(state);
    const std::vector<Cell> cluster = region.cells();
    std::vector<double> weights;
    double total = 0.0;
    for (const Cell c : cluster) {
        weights.push_back(dist.at(c.x, c.y));
        total += weights.back();
    }
    for (std::size_t i = 0; i < cluster.size(); ++i) {
        report.conditional.emplace_back(cluster[i], weights[i] / total);
        const Cell off{cluster[i].x - region.anchor().x, cluster[i].y - region.anchor().y};
        report.expected_queries += weights[i] / total * (off.x + 1 + off.y + 1);
    }

    const MarkOracle oracle = [&region](Cell c) { return region.is_marked(c); };
    std::mt19937_64 rng(config.seed);
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    double sum = 0.0, sum_sq = 0.0;
    for (std::int64_t t = 0; t < config.trials; ++t) {
        const Cell start = cluster[pick(rng)];
        QueryLog log = locate_cluster(oracle, start, g, config.k);
        if (log.recovered == cluster) ++report.recovered_ok;
        const double q = log.query_count();
        sum += q;
        sum_sq += q * q;
        report.max_queries = std::max(report.max_queries, log.query_count());
        if (t == 0) report.first_log = std::move(log);
    }
    report.trials = config.trials;
    const double n = static_cast<double>(config.trials);
    report.mean_queries = sum / n;
    if (config.trials > 1) {
        const double var = (sum_sq - n * report.mean_queries * report.mean_queries) / (n - 1.0);
        report.stderr_queries = std::sqrt(std::max(var, 0.0) / n);
    }
    return report;
}

void write_vicinity_report(const VicinityReport& r, std::ostream& out) {
    out << "loop_weight          " << r.loop_weight << '\n'
        << "quantum_steps        " << r.quantum_steps << '\n'
        << "peak_probability     " << r.peak_probability << '\n'
        << "initial_probability  " << r.initial_probability << '\n';
    if (r.unreliable) {
        out << "warning: peak marked probability is below the initial k/N; the sampled marked "
               "cell is unreliable\n";
    }
    out << "first_start          (" << r.first_log.start.x << "," << r.first_log.start.y << ")\n"
        << "first_corner         (" << r.first_log.corner.x << "," << r.first_log.corner.y << ")\n"
        << "first_queries        " << r.first_log.query_count() << " (left "
        << r.first_log.left_queries << ", down " << r.first_log.down_queries << ")\n"
        << "trials               " << r.trials << '\n'
        << "recovered_ok         " << r.recovered_ok << '\n'
        << "mean_queries         " << r.mean_queries << " +/- " << r.stderr_queries << '\n'
        << "expected_queries     " << r.expected_queries << '\n'
        << "max_queries          " << r.max_queries << '\n'
        << "total_cost           " << r.quantum_steps << " quantum steps + " << r.mean_queries
        << " classical queries (mean)\n";
}

}  // namespace lqw
