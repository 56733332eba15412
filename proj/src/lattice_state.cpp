#include "lqw/lattice_state.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace lqw {

namespace {

void require_weight(double loop_weight) {
    if (!(loop_weight >= 0.0) || !std::isfinite(loop_weight)) {
        throw std::invalid_argument("loop weight must be a finite value >= 0");
    }
}

}  // namespace

WalkState::WalkState(GridGeometry geometry, double loop_weight)
    : geometry_(geometry),
      loop_weight_(loop_weight),
      amplitudes_(kCoinDim * geometry.cell_count()) {
    require_weight(loop_weight);
}

WalkState::WalkState(GridGeometry geometry, double loop_weight, std::vector<Amplitude> amplitudes)
    : geometry_(geometry), loop_weight_(loop_weight), amplitudes_(std::move(amplitudes)) {
    require_weight(loop_weight);
    if (amplitudes_.size() != kCoinDim * geometry_.cell_count()) {
        throw std::invalid_argument("amplitude array has length " +
                                    std::to_string(amplitudes_.size()) + ", expected " +
                                    std::to_string(kCoinDim * geometry_.cell_count()));
    }
}

WalkState new_uniform_state(const GridGeometry& geometry, double loop_weight) {
    WalkState state(geometry, loop_weight);
    const double n = static_cast<double>(geometry.cell_count());
    const double move = 1.0 / std::sqrt(n * (4.0 + loop_weight));
    const double loop = std::sqrt(loop_weight / (n * (4.0 + loop_weight)));
    const std::size_t cells = geometry.cell_count();
    auto amps = state.amplitudes();
    for (int d = 0; d < kCoinDim; ++d) {
        const Amplitude value = d == static_cast<int>(CoinDirection::Loop) ? loop : move;
        std::fill_n(amps.begin() + static_cast<std::ptrdiff_t>(d * cells), cells, value);
    }
    return state;
}

double total_norm(const WalkState& state) {
    double sum = 0.0;
    for (const auto& a : state.amplitudes()) sum += std::norm(a);
    return sum;
}

double marked_probability(const WalkState& state, const MarkedRegion& region) {
    if (!(region.geometry() == state.geometry())) {
        throw std::invalid_argument("marked region lies on a different grid than the state");
    }
    double sum = 0.0;
    for (const Cell c : region.cells())
        for (const auto d : kAllDirections) sum += std::norm(state.at(d, c.x, c.y));
    return sum;
}

CellDistribution position_distribution(const WalkState& state) {
    const std::size_t cells = state.geometry().cell_count();
    CellDistribution out{state.geometry(), std::vector<double>(cells, 0.0)};
    auto amps = state.amplitudes();
    for (int d = 0; d < kCoinDim; ++d)
        for (std::size_t c = 0; c < cells; ++c) out.probabilities[c] += std::norm(amps[d * cells + c]);
    return out;
}

double max_abs_difference(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    if (a.size() != b.size()) throw std::invalid_argument("amplitude arrays differ in length");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

namespace {
constexpr const char* kSnapshotMagic = "lqw-snapshot-v1";
}

void write_snapshot(const WalkState& state, const std::filesystem::path& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open snapshot file " + path.string());
    std::fprintf(f, "%s\nside %d\nloop_weight %.17g\n", kSnapshotMagic, state.geometry().side(),
                 state.loop_weight());
    for (const auto& a : state.amplitudes()) std::fprintf(f, "%.17g %.17g\n", a.real(), a.imag());
    const bool failed = std::ferror(f) != 0;
    if (std::fclose(f) != 0 || failed) {
        throw std::runtime_error("error writing snapshot file " + path.string());
    }
}

WalkState read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open snapshot file " + path.string());
    std::string magic, key_side, key_weight;
    int side = 0;
    double weight = 0.0;
    in >> magic >> key_side >> side >> key_weight >> weight;
    if (!in || magic != kSnapshotMagic || key_side != "side" || key_weight != "loop_weight") {
        throw std::runtime_error("malformed snapshot header in " + path.string());
    }
    GridGeometry g(side);
    std::vector<Amplitude> amps(kCoinDim * g.cell_count());
    for (auto& a : amps) {
        double re = 0.0, im = 0.0;
        if (!(in >> re >> im)) throw std::runtime_error("truncated snapshot " + path.string());
        a = {re, im};
    }
    return WalkState(g, weight, std::move(amps));
}

}  // namespace lqw
