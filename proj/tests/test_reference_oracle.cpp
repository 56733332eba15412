#include <gtest/gtest.h>

#include <cmath>

#include "lqw/reference_oracle.hpp"
#include "lqw/walk_engine.hpp"

using namespace lqw;

TEST(DenseStep, UniformVectorIsEigenvector) {
    const GridGeometry g(2);
    const auto u = reference::build_step_matrix(g, MarkedRegion::empty(g), 0.0);
    const auto v = reference::dense_uniform_vector(g, 0.0);
    const auto out = reference::dense_evolve(u, v, 1);
    EXPECT_LE(max_abs_difference(out, v), 1e-14);
    EXPECT_LE(max_abs_difference(reference::dense_evolve(u, v, 2), v), 1e-14);
}

TEST(DenseStep, Unitary) {
    const GridGeometry g(3);
    EXPECT_LE(reference::unitarity_error(reference::build_step_matrix(g, make_cluster(g, 1, {1, 1}), 0.0)),
              1e-13);
    EXPECT_LE(reference::unitarity_error(
                  reference::build_step_matrix(g, make_cluster(g, 4, {0, 1}), 0.7, MarkedCoin::NegatedIdentity)),
              1e-13);
}

TEST(DenseStep, AllMarkedIdentityCoinIsNegatedShift) {
    const GridGeometry g(2);
    const auto u = reference::build_step_matrix(g, make_cluster(g, 4, {0, 0}), 0.0,
                                                MarkedCoin::NegatedIdentity);
    const auto s = reference::build_shift_matrix(g);
    for (std::size_t i = 0; i < u.matrix.size(); ++i) {
        EXPECT_EQ(u.matrix[i], -s.matrix[i]);
        EXPECT_TRUE(u.matrix[i] == Amplitude(0.0) || u.matrix[i] == Amplitude(-1.0));
    }
}

TEST(DenseStep, ZeroStepsIsIdentity) {
    const GridGeometry g(3);
    const auto u = reference::build_step_matrix(g, make_cluster(g, 1, {0, 0}), 0.1);
    std::vector<Amplitude> v(u.dimension);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = {double(i), 1.0};
    EXPECT_EQ(reference::dense_evolve(u, v, 0), v);
}

TEST(DenseStep, Guardrails) {
    const GridGeometry g(9);
    EXPECT_THROW(reference::build_step_matrix(g, MarkedRegion::empty(g), 0.0), std::invalid_argument);
    const GridGeometry small(2);
    const auto u = reference::build_step_matrix(small, MarkedRegion::empty(small), 0.0);
    EXPECT_THROW(reference::dense_evolve(u, std::vector<Amplitude>(3), 1), std::invalid_argument);
}

// Every grid, cluster, anchor and weight that fits; amplitudes compared at every step.
TEST(DenseStep, EngineEquivalence) {
    for (int side : {2, 3, 4}) {
        const GridGeometry g(side);
        const double n = static_cast<double>(g.cell_count());
        for (int k : {1, 4, 9}) {
            const int root = static_cast<int>(std::lround(std::sqrt(k)));
            if (root > side) continue;
            std::vector<double> weights = {0.0, 4.0 / n};
            if (k % 2) weights.push_back(preset_weight(WeightPreset::Proposed, g, k));
            for (int ay = 0; ay + root <= side; ++ay)
                for (int ax = 0; ax + root <= side; ++ax)
                    for (double l : weights)
                        for (auto coin : {MarkedCoin::NegatedGrover, MarkedCoin::NegatedIdentity}) {
                            const auto region = make_cluster(g, k, {ax, ay});
                            const auto u = reference::build_step_matrix(g, region, l, coin);
                            auto dense = reference::dense_uniform_vector(g, l);
                            auto state = new_uniform_state(g, l);
                            const StepConfig step(region, l, coin);
                            for (int t = 1; t <= 25; ++t) {
                                walk_step(state, step);
                                dense = reference::dense_evolve(u, std::move(dense), 1);
                                ASSERT_LE(max_abs_difference(state.amplitudes(), dense), 1e-12)
                                    << "side " << side << " k " << k << " anchor (" << ax << ","
                                    << ay << ") l " << l << " t " << t;
                            }
                        }
        }
    }
}
