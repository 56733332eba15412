#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

namespace lqw {

/// A √N × √N torus. `side` cells per axis, `cell_count()` = side².
class GridGeometry {
public:
    explicit GridGeometry(int side);

    int side() const noexcept { return side_; }
    std::size_t cell_count() const noexcept {
        return static_cast<std::size_t>(side_) * static_cast<std::size_t>(side_);
    }

    /// Wrap a coordinate onto [0, side).
    int wrap(int coord) const noexcept {
        int r = coord % side_;
        return r < 0 ? r + side_ : r;
    }

    friend bool operator==(const GridGeometry&, const GridGeometry&) = default;

private:
    int side_;
};

/// x is the column, y the row.
struct Cell {
    int x = 0;
    int y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Ordinals are part of the snapshot and trace layout.
enum class CoinDirection : std::uint8_t { Up = 0, Down = 1, Left = 2, Right = 3, Loop = 4 };

inline constexpr int kCoinDim = 5;

inline constexpr std::array<CoinDirection, kCoinDim> kAllDirections = {
    CoinDirection::Up, CoinDirection::Down, CoinDirection::Left, CoinDirection::Right,
    CoinDirection::Loop};

std::string_view to_string(CoinDirection d);

}  // namespace lqw

template <>
struct std::hash<lqw::Cell> {
    std::size_t operator()(const lqw::Cell& c) const noexcept {
        return std::hash<std::int64_t>{}((static_cast<std::int64_t>(c.x) << 32) ^
                                         static_cast<std::uint32_t>(c.y));
    }
};
