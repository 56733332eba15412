#pragma once

#include <cstddef>
#include <utility>

#include "lqw/kernels.hpp"

namespace lqw::kernels::detail {

inline bool in_marked_block(const CoinParams& p, int x, int y) noexcept {
    return x >= p.marked_x0 && x < p.marked_x0 + p.marked_side && y >= p.marked_y0 &&
           y < p.marked_y0 + p.marked_side;
}

// Coin on the five amplitudes of cell `c`, which sit N apart in storage.
inline void coin_cell(Amplitude* amps, std::size_t n, std::size_t c, const CoinParams& p,
                      bool marked) noexcept {
    if (marked && p.marked_coin == MarkedCoin::NegatedIdentity) {
        for (int d = 0; d < kCoinDim; ++d) amps[d * n + c] = -amps[d * n + c];
        return;
    }
    Amplitude dot = 0.0;
    for (int d = 0; d < kCoinDim; ++d) dot += p.axis[d] * amps[d * n + c];
    // D v = 2 s (s·v) − v; the marked cell gets −D v.
    for (int d = 0; d < kCoinDim; ++d) {
        const Amplitude reflected = 2.0 * p.axis[d] * dot;
        Amplitude& a = amps[d * n + c];
        a = marked ? a - reflected : reflected - a;
    }
}

// Flip-flop swaps for row y: Up(x,y) <-> Down(x,y-1) and Left(x,y) <-> Right(x-1,y).
inline void shift_row(Amplitude* amps, int side, int y) noexcept {
    const std::size_t n = static_cast<std::size_t>(side) * side;
    const int below = y == 0 ? side - 1 : y - 1;
    Amplitude* up = amps + 0 * n + static_cast<std::size_t>(y) * side;
    Amplitude* down = amps + 1 * n + static_cast<std::size_t>(below) * side;
    Amplitude* left = amps + 2 * n + static_cast<std::size_t>(y) * side;
    Amplitude* right = amps + 3 * n + static_cast<std::size_t>(y) * side;
    for (int x = 0; x < side; ++x) {
        std::swap(up[x], down[x]);
        std::swap(left[x], right[x == 0 ? side - 1 : x - 1]);
    }
}

}  // namespace lqw::kernels::detail
