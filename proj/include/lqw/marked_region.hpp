#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lqw/grid.hpp"

namespace lqw {

/// Integer square root of k when k is a perfect square, nullopt otherwise.
std::optional<int> exact_sqrt(long long k);

/// A √k × √k block of marked cells. `anchor` is the lower-left cell (smallest x and y);
/// the block never wraps around the torus edge.
class MarkedRegion {
public:
    /// Empty region (k = 0) on the given grid.
    static MarkedRegion empty(const GridGeometry& geometry);

    const GridGeometry& geometry() const noexcept { return geometry_; }
    Cell anchor() const noexcept { return anchor_; }
    int cluster_side() const noexcept { return cluster_side_; }
    int k() const noexcept { return cluster_side_ * cluster_side_; }

    /// Throws std::out_of_range for a cell outside the grid.
    bool is_marked(Cell cell) const;

    /// Membership test without bounds checking; cell must lie in the grid.
    bool contains(int x, int y) const noexcept {
        return x >= anchor_.x && x < anchor_.x + cluster_side_ && y >= anchor_.y &&
               y < anchor_.y + cluster_side_;
    }

    /// Marked cells in row-major order (y outer, x inner).
    std::vector<Cell> cells() const;

private:
    friend MarkedRegion make_cluster(const GridGeometry&, int, Cell);
    MarkedRegion(GridGeometry g, Cell anchor, int cluster_side)
        : geometry_(g), anchor_(anchor), cluster_side_(cluster_side) {}

    GridGeometry geometry_;
    Cell anchor_;
    int cluster_side_;
};

/// Throws std::invalid_argument if k is not a positive perfect square or the cluster
/// does not fit inside the grid without wrapping.
MarkedRegion make_cluster(const GridGeometry& geometry, int k, Cell anchor);

enum class WeightPreset { Zero, WongSingle, QuarterInverse, Proposed };

std::string_view to_string(WeightPreset preset);
/// Accepts the names printed by to_string ("zero", "wong", "quarter", "proposed").
WeightPreset parse_preset(std::string_view name);

/// Self-loop weight l for the preset: 0, 4/N, 1/(4N), or 4/(N(k + ⌊√k/2⌋)).
/// Proposed requires k to be an odd perfect square.
double preset_weight(WeightPreset preset, const GridGeometry& geometry, int k);

}  // namespace lqw
