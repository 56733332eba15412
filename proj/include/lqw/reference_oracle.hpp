#pragma once

// Brute-force dense simulator for tiny grids. Builds U = S·(C ⊗ I) as an explicit
// 5N × 5N matrix straight from the operator definitions and shares no code with the
// kernels, so it can serve as ground truth for them.

#include <vector>

#include "lqw/kernels.hpp"
#include "lqw/lattice_state.hpp"
#include "lqw/marked_region.hpp"

namespace lqw::reference {

inline constexpr int kMaxSide = 8;

struct DenseStep {
    std::size_t dimension = 0;
    std::vector<Amplitude> matrix;  // row-major

    const Amplitude& operator()(std::size_t row, std::size_t col) const {
        return matrix[row * dimension + col];
    }
};

/// Throws std::invalid_argument when side > kMaxSide.
DenseStep build_step_matrix(const GridGeometry& geometry, const MarkedRegion& region,
                            double loop_weight, MarkedCoin marked_coin = MarkedCoin::NegatedGrover);

/// Shift permutation alone, as a dense matrix.
DenseStep build_shift_matrix(const GridGeometry& geometry);

/// U^steps · initial by repeated matrix-vector products.
std::vector<Amplitude> dense_evolve(const DenseStep& step, std::vector<Amplitude> initial,
                                    int steps);

/// Weighted uniform vector, written out from its closed form.
std::vector<Amplitude> dense_uniform_vector(const GridGeometry& geometry, double loop_weight);

/// max |(U U†)_ij − δ_ij|.
double unitarity_error(const DenseStep& step);

}  // namespace lqw::reference
