#pragma once

#include <complex>
#include <filesystem>
#include <span>
#include <vector>

#include "lqw/grid.hpp"
#include "lqw/marked_region.hpp"

namespace lqw {

using Amplitude = std::complex<double>;

/// Full walker state: 5·N complex amplitudes stored direction-major, then y, then x.
/// Amplitude (d, x, y) lives at index d·N + y·side + x.
class WalkState {
public:
    WalkState(GridGeometry geometry, double loop_weight);  // all amplitudes zero
    WalkState(GridGeometry geometry, double loop_weight, std::vector<Amplitude> amplitudes);

    const GridGeometry& geometry() const noexcept { return geometry_; }
    double loop_weight() const noexcept { return loop_weight_; }

    std::size_t index(CoinDirection d, int x, int y) const noexcept {
        return static_cast<std::size_t>(d) * geometry_.cell_count() +
               static_cast<std::size_t>(y) * static_cast<std::size_t>(geometry_.side()) +
               static_cast<std::size_t>(x);
    }

    Amplitude& at(CoinDirection d, int x, int y) noexcept { return amplitudes_[index(d, x, y)]; }
    const Amplitude& at(CoinDirection d, int x, int y) const noexcept {
        return amplitudes_[index(d, x, y)];
    }

    std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }
    std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }

    friend bool operator==(const WalkState&, const WalkState&) = default;

private:
    GridGeometry geometry_;
    double loop_weight_;
    std::vector<Amplitude> amplitudes_;
};

/// Probability per cell with the coin register summed out, indexed y·side + x.
struct CellDistribution {
    GridGeometry geometry;
    std::vector<double> probabilities;

    double at(int x, int y) const {
        return probabilities[static_cast<std::size_t>(y) * geometry.side() + x];
    }
};

/// Weighted uniform superposition: 1/√(N(4+l)) on each move direction and √(l/(N(4+l)))
/// on Loop in every cell. This is the +1 eigenstate of the unmarked walk.
WalkState new_uniform_state(const GridGeometry& geometry, double loop_weight);

double total_norm(const WalkState& state);

/// Total probability on the marked cells, all five coin directions included.
double marked_probability(const WalkState& state, const MarkedRegion& region);

CellDistribution position_distribution(const WalkState& state);

/// Largest |a_i − b_i| over all amplitudes. Geometries must match.
double max_abs_difference(std::span<const Amplitude> a, std::span<const Amplitude> b);

/// Text snapshot: a header line, geometry, loop weight, then one "re im" pair per amplitude
/// in storage order, printed with 17 significant digits.
void write_snapshot(const WalkState& state, const std::filesystem::path& path);
WalkState read_snapshot(const std::filesystem::path& path);

}  // namespace lqw
