#pragma once

#include <array>

#include "lqw/kernels.hpp"
#include "lqw/lattice_state.hpp"
#include "lqw/marked_region.hpp"

namespace lqw {

/// Grover diffusion D = 2|s⟩⟨s| − I on the five-dimensional coin space, where
/// s = (1, 1, 1, 1, √l) / √(4 + l).
class CoinOperator {
public:
    explicit CoinOperator(double loop_weight);

    double loop_weight() const noexcept { return loop_weight_; }
    const std::array<double, kCoinDim>& axis() const noexcept { return axis_; }
    double entry(int row, int col) const noexcept { return matrix_[row][col]; }
    const std::array<std::array<double, kCoinDim>, kCoinDim>& matrix() const noexcept {
        return matrix_;
    }

    std::array<Amplitude, kCoinDim> apply(const std::array<Amplitude, kCoinDim>& v) const;

private:
    double loop_weight_;
    std::array<double, kCoinDim> axis_;
    std::array<std::array<double, kCoinDim>, kCoinDim> matrix_;
};

/// Throws std::invalid_argument for negative or non-finite l.
CoinOperator grover_coin(double loop_weight);

/// Parameters of one application of U = S·(C ⊗ I).
class StepConfig {
public:
    StepConfig(MarkedRegion region, double loop_weight,
               MarkedCoin marked_coin = MarkedCoin::NegatedGrover,
               Backend backend = Backend::Serial);

    const GridGeometry& geometry() const noexcept { return region_.geometry(); }
    const MarkedRegion& region() const noexcept { return region_; }
    double loop_weight() const noexcept { return coin_.loop_weight(); }
    const CoinOperator& coin() const noexcept { return coin_; }
    MarkedCoin marked_coin() const noexcept { return marked_coin_; }
    Backend backend() const noexcept { return backend_; }
    const kernels::CoinParams& kernel_params() const noexcept { return params_; }

private:
    MarkedRegion region_;
    CoinOperator coin_;
    MarkedCoin marked_coin_;
    Backend backend_;
    kernels::CoinParams params_;
};

/// D on every unmarked cell, the marked coin on every marked cell.
void apply_coin(WalkState& state, const StepConfig& config);

/// Flip-flop shift on the torus: |x,y,Up⟩ ↔ |x,y−1,Down⟩, |x,y,Left⟩ ↔ |x−1,y,Right⟩,
/// Loop amplitudes stay. An involution.
void apply_flip_flop_shift(WalkState& state, Backend backend = Backend::Serial);

/// One step: coin, then shift.
void walk_step(WalkState& state, const StepConfig& config);

std::string_view to_string(MarkedCoin coin);
MarkedCoin parse_marked_coin(std::string_view name);
std::string_view to_string(Backend backend);
Backend parse_backend(std::string_view name);

}  // namespace lqw
