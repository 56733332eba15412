#include "cell_ops.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace lqw::kernels::omp {

void apply_coin(std::span<Amplitude> amps, int side, const CoinParams& params) {
    const std::size_t n = static_cast<std::size_t>(side) * side;
    Amplitude* data = amps.data();
#pragma omp parallel for schedule(static)
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            const std::size_t c = static_cast<std::size_t>(y) * side + x;
            detail::coin_cell(data, n, c, params, detail::in_marked_block(params, x, y));
        }
    }
}

// Each swap pair belongs to exactly one row y, so rows can be processed independently.
void apply_shift(std::span<Amplitude> amps, int side) {
    Amplitude* data = amps.data();
#pragma omp parallel for schedule(static)
    for (int y = 0; y < side; ++y) detail::shift_row(data, side, y);
}

int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace lqw::kernels::omp
