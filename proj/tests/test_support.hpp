#pragma once

#include <random>

#include "lqw/lattice_state.hpp"

namespace lqw::test_support {

/// Random normalised complex state.
inline WalkState random_state(const GridGeometry& g, double loop_weight, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    WalkState s(g, loop_weight);
    double norm = 0.0;
    for (auto& a : s.amplitudes()) {
        a = {normal(rng), normal(rng)};
        norm += std::norm(a);
    }
    for (auto& a : s.amplitudes()) a /= std::sqrt(norm);
    return s;
}

}  // namespace lqw::test_support
