#include "cell_ops.hpp"

namespace lqw::kernels::serial {

void apply_coin(std::span<Amplitude> amps, int side, const CoinParams& params) {
    const std::size_t n = static_cast<std::size_t>(side) * side;
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            const std::size_t c = static_cast<std::size_t>(y) * side + x;
            detail::coin_cell(amps.data(), n, c, params, detail::in_marked_block(params, x, y));
        }
    }
}

void apply_shift(std::span<Amplitude> amps, int side) {
    for (int y = 0; y < side; ++y) detail::shift_row(amps.data(), side, y);
}

}  // namespace lqw::kernels::serial
