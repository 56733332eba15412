#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lqw/vicinity_search.hpp"
#include "lqw/walk_engine.hpp"

namespace lqw {

struct SweepConfig {
    std::vector<int> sides = default_sides();
    int k = 9;
    std::vector<WeightPreset> presets = {WeightPreset::Zero, WeightPreset::WongSingle,
                                         WeightPreset::QuarterInverse, WeightPreset::Proposed};
    Cell anchor{0, 0};
    std::optional<int> max_steps;  // default_max_steps(side) when unset
    MarkedCoin marked_coin = MarkedCoin::NegatedGrover;
    int jobs = 0;  // 0 = hardware concurrency

    /// Even sides 8, 10, …, 30.
    static std::vector<int> default_sides();
};

struct SweepRecord {
    int side = 0;
    long long n = 0;
    int k = 0;
    WeightPreset preset = WeightPreset::Zero;
    double loop_weight = 0.0;
    int peak_step = 0;
    double peak_probability = 0.0;
    double initial_probability = 0.0;

    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct SweepFailure {
    int side = 0;
    WeightPreset preset = WeightPreset::Zero;
    std::string message;
};

struct SweepResult {
    std::vector<SweepRecord> records;  // ordered by (side, preset) as listed in the config
    std::vector<SweepFailure> failures;
};

/// Runs one evolution per (side, preset). The step window starts at max_steps (or the default
/// rule) and doubles, up to 8 times, while the peak sits on its last step. A failing cell is
/// reported in `failures` without stopping the others.
SweepResult run_sweep(const SweepConfig& config);

/// Peak search for a single instance with the same window-widening rule.
EvolutionTrace evolve_with_window(RunConfig config);

struct PresetComparison {
    int side = 0;
    int k = 0;
    WeightPreset baseline = WeightPreset::Zero;
    WeightPreset candidate = WeightPreset::Zero;
    double delta_probability = 0.0;  // candidate − baseline
    int delta_steps = 0;             // candidate − baseline
};

/// Per-side deltas between two presets. Throws std::invalid_argument when any side covered
/// by the records lacks one of the two presets.
std::vector<PresetComparison> compare_presets(const std::vector<SweepRecord>& records,
                                              WeightPreset baseline, WeightPreset candidate);

inline constexpr const char* kSweepCsvHeader =
    "side,N,k,preset,loop_weight,peak_step,peak_probability,initial_probability";

void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out);
std::vector<SweepRecord> parse_sweep_csv(std::istream& in);

/// File variants; throw std::runtime_error naming the path on I/O failure and
/// std::invalid_argument on empty input.
void emit_csv(const std::vector<SweepRecord>& records, const std::filesystem::path& path);
void emit_plot(const std::vector<SweepRecord>& records, const std::filesystem::path& path);

/// SVG with a peak-probability panel and a peak-step panel, one polyline per preset.
std::string render_plot_svg(const std::vector<SweepRecord>& records);

struct VicinityDemoConfig {
    int side = 20;
    int k = 9;
    WeightPreset preset = WeightPreset::Proposed;
    std::optional<double> loop_weight;  // overrides the preset
    Cell anchor{0, 0};
    std::int64_t trials = 1;
    std::uint64_t seed = 1;
    MarkedCoin marked_coin = MarkedCoin::NegatedGrover;
};

struct VicinityReport {
    double loop_weight = 0.0;
    int quantum_steps = 0;  // peak step of the single quantum run
    double peak_probability = 0.0;
    double initial_probability = 0.0;
    bool unreliable = false;  // peak marked probability below k/N
    std::vector<std::pair<Cell, double>> conditional;  // P(cell | marked) at the peak
    QueryLog first_log;
    std::int64_t trials = 0;
    std::int64_t recovered_ok = 0;  // trials whose recovered set equals the true cluster
    double mean_queries = 0.0;
    double stderr_queries = 0.0;
    int max_queries = 0;
    double expected_queries = 0.0;  // exact mean under the conditional distribution
};

/// One quantum evolution to its peak, then `trials` classical vicinity searches from marked
/// cells sampled from the peak state's distribution restricted to the cluster.
VicinityReport run_vicinity_demo(const VicinityDemoConfig& config);

void write_vicinity_report(const VicinityReport& report, std::ostream& out);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Engine-vs-dense-oracle equivalence plus the state and operator invariants.
std::vector<CheckResult> run_verification();

}  // namespace lqw
