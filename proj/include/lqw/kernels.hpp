#pragma once

// Per-cell kernels behind walk_step. Two interchangeable implementations: a plain serial
// loop kept as the reference, and an OpenMP version. Both compute each cell with the same
// arithmetic, so their outputs are bit-identical.

#include <array>
#include <span>

#include "lqw/lattice_state.hpp"

namespace lqw {

enum class Backend { Serial, OpenMP };

/// Coin applied on marked cells.
enum class MarkedCoin {
    NegatedGrover,    ///< −D: phase flip on the vertex, then the Grover coin
    NegatedIdentity,  ///< −I₅
};

namespace kernels {

struct CoinParams {
    std::array<double, kCoinDim> axis;  // unit vector s_D
    int marked_x0 = 0;
    int marked_y0 = 0;
    int marked_side = 0;  // 0 = nothing marked
    MarkedCoin marked_coin = MarkedCoin::NegatedGrover;
};

namespace serial {
void apply_coin(std::span<Amplitude> amps, int side, const CoinParams& params);
void apply_shift(std::span<Amplitude> amps, int side);
}  // namespace serial

namespace omp {
void apply_coin(std::span<Amplitude> amps, int side, const CoinParams& params);
void apply_shift(std::span<Amplitude> amps, int side);
/// Threads OpenMP would use for a parallel region (1 when built without OpenMP).
int max_threads();
}  // namespace omp

}  // namespace kernels
}  // namespace lqw
