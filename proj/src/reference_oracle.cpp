#include "lqw/reference_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lqw::reference {

namespace {

// Basis index of |direction, x, y⟩ in the storage layout.
std::size_t basis(int direction, int x, int y, int side) {
    return static_cast<std::size_t>(direction) * side * side + static_cast<std::size_t>(y) * side + x;
}

void require_small(const GridGeometry& g) {
    if (g.side() > kMaxSide) {
        throw std::invalid_argument("dense oracle limited to side <= " + std::to_string(kMaxSide) +
                                    ", got " + std::to_string(g.side()));
    }
}

}  // namespace

DenseStep build_shift_matrix(const GridGeometry& geometry) {
    require_small(geometry);
    const int side = geometry.side();
    const std::size_t dim = kCoinDim * geometry.cell_count();
    DenseStep s{dim, std::vector<Amplitude>(dim * dim)};
    enum { up, down, left, right, loop };
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            const int ym = (y - 1 + side) % side, yp = (y + 1) % side;
            const int xm = (x - 1 + side) % side, xp = (x + 1) % side;
            // |x,y,↑⟩ → |x,y−1,↓⟩   |x,y,↓⟩ → |x,y+1,↑⟩
            // |x,y,←⟩ → |x−1,y,→⟩   |x,y,→⟩ → |x+1,y,←⟩   |x,y,·⟩ → |x,y,·⟩
            s.matrix[basis(down, x, ym, side) * dim + basis(up, x, y, side)] = 1.0;
            s.matrix[basis(up, x, yp, side) * dim + basis(down, x, y, side)] = 1.0;
            s.matrix[basis(right, xm, y, side) * dim + basis(left, x, y, side)] = 1.0;
            s.matrix[basis(left, xp, y, side) * dim + basis(right, x, y, side)] = 1.0;
            s.matrix[basis(loop, x, y, side) * dim + basis(loop, x, y, side)] = 1.0;
        }
    }
    return s;
}

DenseStep build_step_matrix(const GridGeometry& geometry, const MarkedRegion& region,
                            double loop_weight, MarkedCoin marked_coin) {
    require_small(geometry);
    if (loop_weight < 0.0) throw std::invalid_argument("loop weight must be >= 0");
    const int side = geometry.side();
    const std::size_t dim = kCoinDim * geometry.cell_count();

    double w[kCoinDim];
    for (int i = 0; i < 4; ++i) w[i] = 1.0 / std::sqrt(4.0 + loop_weight);
    w[4] = std::sqrt(loop_weight) / std::sqrt(4.0 + loop_weight);

    std::vector<Amplitude> coin(dim * dim);
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            const bool marked = region.is_marked(Cell{x, y});
            for (int i = 0; i < kCoinDim; ++i) {
                for (int j = 0; j < kCoinDim; ++j) {
                    const double delta = i == j ? 1.0 : 0.0;
                    const double grover = 2.0 * w[i] * w[j] - delta;
                    double value = grover;
                    if (marked) value = marked_coin == MarkedCoin::NegatedGrover ? -grover : -delta;
                    coin[basis(i, x, y, side) * dim + basis(j, x, y, side)] = value;
                }
            }
        }
    }

    const DenseStep shift = build_shift_matrix(geometry);
    DenseStep u{dim, std::vector<Amplitude>(dim * dim)};
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t m = 0; m < dim; ++m) {
            const Amplitude s = shift.matrix[r * dim + m];
            if (s == Amplitude{}) continue;
            for (std::size_t c = 0; c < dim; ++c) u.matrix[r * dim + c] += s * coin[m * dim + c];
        }
    return u;
}

std::vector<Amplitude> dense_evolve(const DenseStep& step, std::vector<Amplitude> initial,
                                    int steps) {
    if (initial.size() != step.dimension) {
        throw std::invalid_argument("vector length does not match the step matrix");
    }
    if (steps < 0) throw std::invalid_argument("step count must be >= 0");
    std::vector<Amplitude> next(step.dimension);
    for (int t = 0; t < steps; ++t) {
        for (std::size_t r = 0; r < step.dimension; ++r) {
            Amplitude acc{};
            for (std::size_t c = 0; c < step.dimension; ++c) acc += step(r, c) * initial[c];
            next[r] = acc;
        }
        initial.swap(next);
    }
    return initial;
}

std::vector<Amplitude> dense_uniform_vector(const GridGeometry& geometry, double loop_weight) {
    const double n = static_cast<double>(geometry.cell_count());
    std::vector<Amplitude> v(kCoinDim * geometry.cell_count());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const bool loop = i / geometry.cell_count() == 4;
        v[i] = loop ? std::sqrt(loop_weight) / std::sqrt(n * (4.0 + loop_weight))
                    : 1.0 / std::sqrt(n * (4.0 + loop_weight));
    }
    return v;
}

double unitarity_error(const DenseStep& step) {
    const std::size_t dim = step.dimension;
    double worst = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Amplitude acc{};
            for (std::size_t m = 0; m < dim; ++m) acc += step(i, m) * std::conj(step(j, m));
            worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

}  // namespace lqw::reference
