#include "lqw/grid.hpp"

#include <stdexcept>
#include <string>

namespace lqw {

GridGeometry::GridGeometry(int side) : side_(side) {
    if (side < 2) {
        throw std::invalid_argument("grid side must be >= 2, got " + std::to_string(side));
    }
}

std::string_view to_string(CoinDirection d) {
    switch (d) {
        case CoinDirection::Up: return "up";
        case CoinDirection::Down: return "down";
        case CoinDirection::Left: return "left";
        case CoinDirection::Right: return "right";
        case CoinDirection::Loop: return "loop";
    }
    return "?";
}

}  // namespace lqw
