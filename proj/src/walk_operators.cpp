#include "lqw/walk_operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lqw {

CoinOperator::CoinOperator(double loop_weight) : loop_weight_(loop_weight) {
    if (!(loop_weight >= 0.0) || !std::isfinite(loop_weight)) {
        throw std::invalid_argument("loop weight must be a finite value >= 0");
    }
    const double norm = std::sqrt(4.0 + loop_weight);
    for (int d = 0; d < 4; ++d) axis_[d] = 1.0 / norm;
    axis_[4] = std::sqrt(loop_weight) / norm;
    for (int i = 0; i < kCoinDim; ++i)
        for (int j = 0; j < kCoinDim; ++j)
            matrix_[i][j] = 2.0 * axis_[i] * axis_[j] - (i == j ? 1.0 : 0.0);
}

std::array<Amplitude, kCoinDim> CoinOperator::apply(const std::array<Amplitude, kCoinDim>& v) const {
    std::array<Amplitude, kCoinDim> out{};
    for (int i = 0; i < kCoinDim; ++i)
        for (int j = 0; j < kCoinDim; ++j) out[i] += matrix_[i][j] * v[j];
    return out;
}

CoinOperator grover_coin(double loop_weight) { return CoinOperator(loop_weight); }

StepConfig::StepConfig(MarkedRegion region, double loop_weight, MarkedCoin marked_coin,
                       Backend backend)
    : region_(std::move(region)), coin_(loop_weight), marked_coin_(marked_coin), backend_(backend) {
    params_.axis = coin_.axis();
    params_.marked_x0 = region_.anchor().x;
    params_.marked_y0 = region_.anchor().y;
    params_.marked_side = region_.cluster_side();
    params_.marked_coin = marked_coin_;
}

namespace {

void require_same_grid(const WalkState& state, const StepConfig& config) {
    if (!(state.geometry() == config.geometry())) {
        throw std::invalid_argument("state grid side " + std::to_string(state.geometry().side()) +
                                    " does not match step config side " +
                                    std::to_string(config.geometry().side()));
    }
}

}  // namespace

void apply_coin(WalkState& state, const StepConfig& config) {
    require_same_grid(state, config);
    const int side = state.geometry().side();
    if (config.backend() == Backend::OpenMP)
        kernels::omp::apply_coin(state.amplitudes(), side, config.kernel_params());
    else
        kernels::serial::apply_coin(state.amplitudes(), side, config.kernel_params());
}

void apply_flip_flop_shift(WalkState& state, Backend backend) {
    const int side = state.geometry().side();
    if (backend == Backend::OpenMP)
        kernels::omp::apply_shift(state.amplitudes(), side);
    else
        kernels::serial::apply_shift(state.amplitudes(), side);
}

void walk_step(WalkState& state, const StepConfig& config) {
    apply_coin(state, config);
    apply_flip_flop_shift(state, config.backend());
}

std::string_view to_string(MarkedCoin coin) {
    return coin == MarkedCoin::NegatedGrover ? "grover" : "identity";
}

MarkedCoin parse_marked_coin(std::string_view name) {
    if (name == "grover") return MarkedCoin::NegatedGrover;
    if (name == "identity") return MarkedCoin::NegatedIdentity;
    throw std::invalid_argument("unknown marked coin '" + std::string(name) +
                                "' (expected grover or identity)");
}

std::string_view to_string(Backend backend) {
    return backend == Backend::OpenMP ? "openmp" : "serial";
}

Backend parse_backend(std::string_view name) {
    if (name == "serial") return Backend::Serial;
    if (name == "openmp") return Backend::OpenMP;
    throw std::invalid_argument("unknown backend '" + std::string(name) +
                                "' (expected serial or openmp)");
}

}  // namespace lqw
