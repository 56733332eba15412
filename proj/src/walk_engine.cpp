#include "lqw/walk_engine.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace lqw {

int default_max_steps(const GridGeometry& geometry) {
    const double n = static_cast<double>(geometry.cell_count());
    return static_cast<int>(std::ceil(2.0 * std::sqrt(n * std::log(n))));
}

namespace {

void validate(const RunConfig& config) {
    if (config.max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
    if (config.record_stride < 1) throw std::invalid_argument("record_stride must be >= 1");
}

StepConfig step_config(const RunConfig& config) {
    return StepConfig(config.region, config.loop_weight, config.marked_coin, config.backend);
}

}  // namespace

EvolutionTrace evolve(const RunConfig& config) {
    validate(config);
    const StepConfig step = step_config(config);
    WalkState state = new_uniform_state(config.geometry(), config.loop_weight);

    EvolutionTrace trace{config, {}, 0, 0.0, 0.0};
    trace.series.reserve(static_cast<std::size_t>(
        (config.max_steps + config.record_stride - 1) / config.record_stride + 1));

    const double p0 = marked_probability(state, config.region);
    trace.initial_probability = p0;
    trace.peak_probability = p0;
    trace.series.push_back({0, p0});

    for (int t = 1; t <= config.max_steps; ++t) {
        walk_step(state, step);
        const double p = marked_probability(state, config.region);
        if (p > trace.peak_probability) {
            trace.peak_probability = p;
            trace.peak_step = t;
        }
        if (t % config.record_stride == 0 || t == config.max_steps) trace.series.push_back({t, p});
    }
    return trace;
}

WalkState evolve_state(const RunConfig& config, int steps) {
    if (steps < 0) throw std::invalid_argument("step count must be >= 0");
    const StepConfig step = step_config(config);
    WalkState state = new_uniform_state(config.geometry(), config.loop_weight);
    for (int t = 0; t < steps; ++t) walk_step(state, step);
    return state;
}

std::pair<int, double> peak(const std::vector<TracePoint>& series) {
    if (series.empty()) throw std::invalid_argument("cannot take the peak of an empty series");
    TracePoint best = series.front();
    for (const auto& point : series)
        if (point.marked_probability > best.marked_probability) best = point;
    return {best.step, best.marked_probability};
}

std::pair<int, double> peak(const EvolutionTrace& trace) { return peak(trace.series); }

double stationarity_deviation(const GridGeometry& geometry, double loop_weight, int steps) {
    const WalkState initial = new_uniform_state(geometry, loop_weight);
    const StepConfig step(MarkedRegion::empty(geometry), loop_weight);
    WalkState state = initial;
    double worst = 0.0;
    for (int t = 0; t < steps; ++t) {
        walk_step(state, step);
        worst = std::max(worst, max_abs_difference(state.amplitudes(), initial.amplitudes()));
    }
    return worst;
}

void write_trace_csv(const EvolutionTrace& trace, std::ostream& out) {
    out << "step,marked_probability\n";
    char buf[64];
    for (const auto& point : trace.series) {
        std::snprintf(buf, sizeof buf, "%d,%.17g\n", point.step, point.marked_probability);
        out << buf;
    }
}

}  // namespace lqw
