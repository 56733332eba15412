#include "lqw/marked_region.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lqw {

std::optional<int> exact_sqrt(long long k) {
    if (k < 0) return std::nullopt;
    auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(k))));
    while (r * r > k) --r;
    while ((r + 1) * (r + 1) <= k) ++r;
    if (r * r != k) return std::nullopt;
    return static_cast<int>(r);
}

MarkedRegion MarkedRegion::empty(const GridGeometry& geometry) {
    return MarkedRegion(geometry, Cell{0, 0}, 0);
}

bool MarkedRegion::is_marked(Cell cell) const {
    const int side = geometry_.side();
    if (cell.x < 0 || cell.x >= side || cell.y < 0 || cell.y >= side) {
        throw std::out_of_range("cell (" + std::to_string(cell.x) + "," +
                                std::to_string(cell.y) + ") outside " + std::to_string(side) +
                                "x" + std::to_string(side) + " grid");
    }
    return contains(cell.x, cell.y);
}

std::vector<Cell> MarkedRegion::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(k()));
    for (int b = 0; b < cluster_side_; ++b)
        for (int a = 0; a < cluster_side_; ++a) out.push_back({anchor_.x + a, anchor_.y + b});
    return out;
}

MarkedRegion make_cluster(const GridGeometry& geometry, int k, Cell anchor) {
    auto root = exact_sqrt(k);
    if (k <= 0 || !root) {
        throw std::invalid_argument("k = " + std::to_string(k) + " is not a positive perfect square");
    }
    const int side = geometry.side();
    if (anchor.x < 0 || anchor.y < 0 || anchor.x + *root > side || anchor.y + *root > side) {
        throw std::invalid_argument("cluster of side " + std::to_string(*root) + " at (" +
                                    std::to_string(anchor.x) + "," + std::to_string(anchor.y) +
                                    ") exceeds " + std::to_string(side) + "x" +
                                    std::to_string(side) + " grid");
    }
    return MarkedRegion(geometry, anchor, *root);
}

std::string_view to_string(WeightPreset preset) {
    switch (preset) {
        case WeightPreset::Zero: return "zero";
        case WeightPreset::WongSingle: return "wong";
        case WeightPreset::QuarterInverse: return "quarter";
        case WeightPreset::Proposed: return "proposed";
    }
    return "?";
}

WeightPreset parse_preset(std::string_view name) {
    if (name == "zero") return WeightPreset::Zero;
    if (name == "wong") return WeightPreset::WongSingle;
    if (name == "quarter") return WeightPreset::QuarterInverse;
    if (name == "proposed") return WeightPreset::Proposed;
    throw std::invalid_argument("unknown weight preset '" + std::string(name) +
                                "' (expected zero, wong, quarter or proposed)");
}

double preset_weight(WeightPreset preset, const GridGeometry& geometry, int k) {
    const double n = static_cast<double>(geometry.cell_count());
    switch (preset) {
        case WeightPreset::Zero: return 0.0;
        case WeightPreset::WongSingle: return 4.0 / n;
        case WeightPreset::QuarterInverse: return 1.0 / (4.0 * n);
        case WeightPreset::Proposed: {
            auto root = exact_sqrt(k);
            if (k <= 0 || !root || k % 2 == 0) {
                throw std::invalid_argument("proposed weight needs an odd perfect-square k, got " +
                                            std::to_string(k));
            }
            return 4.0 / (n * static_cast<double>(k + *root / 2));
        }
    }
    throw std::invalid_argument("unknown weight preset");
}

}  // namespace lqw
