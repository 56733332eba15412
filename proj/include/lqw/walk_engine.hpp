#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "lqw/walk_operators.hpp"

namespace lqw {

struct RunConfig {
    MarkedRegion region;
    double loop_weight = 0.0;
    int max_steps = 1;
    int record_stride = 1;
    MarkedCoin marked_coin = MarkedCoin::NegatedGrover;
    Backend backend = Backend::Serial;

    const GridGeometry& geometry() const noexcept { return region.geometry(); }
};

struct TracePoint {
    int step = 0;
    double marked_probability = 0.0;

    friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct EvolutionTrace {
    RunConfig config;
    std::vector<TracePoint> series;  // step 0, every record_stride-th step, and the last step
    int peak_step = 0;               // earliest step attaining the maximum, over all steps
    double peak_probability = 0.0;
    double initial_probability = 0.0;
};

/// ⌈2·√(N ln N)⌉.
int default_max_steps(const GridGeometry& geometry);

/// Runs max_steps walk steps from the uniform state. The peak is tracked on every step
/// regardless of record_stride.
EvolutionTrace evolve(const RunConfig& config);

/// State after exactly `steps` walk steps from the uniform state.
WalkState evolve_state(const RunConfig& config, int steps);

/// Earliest argmax over the recorded series. Throws on an empty series.
std::pair<int, double> peak(const EvolutionTrace& trace);
std::pair<int, double> peak(const std::vector<TracePoint>& series);

/// Largest amplitude change from the uniform state over `steps` unmarked walk steps.
double stationarity_deviation(const GridGeometry& geometry, double loop_weight, int steps);

/// CSV with header `step,marked_probability`, 17 significant digits.
void write_trace_csv(const EvolutionTrace& trace, std::ostream& out);

}  // namespace lqw
