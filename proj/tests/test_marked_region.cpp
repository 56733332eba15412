#include <gtest/gtest.h>

#include <set>

#include "lqw/marked_region.hpp"

using namespace lqw;

TEST(MarkedRegion, ClusterAtOrigin) {
    const auto r = make_cluster(GridGeometry(10), 9, {0, 0});
    EXPECT_EQ(r.k(), 9);
    EXPECT_EQ(r.cluster_side(), 3);
    const auto listed = r.cells();
    std::set<Cell> cells(listed.begin(), listed.end());
    std::set<Cell> want;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) want.insert({x, y});
    EXPECT_EQ(cells, want);
}

TEST(MarkedRegion, SingleCellInCorner) {
    const auto r = make_cluster(GridGeometry(4), 1, {3, 3});
    ASSERT_EQ(r.cells().size(), 1u);
    EXPECT_EQ(r.cells()[0], (Cell{3, 3}));
}

TEST(MarkedRegion, RejectsClusterPastEdge) {
    EXPECT_THROW(make_cluster(GridGeometry(4), 9, {2, 2}), std::invalid_argument);
    EXPECT_THROW(make_cluster(GridGeometry(4), 1, {-1, 0}), std::invalid_argument);
}

TEST(MarkedRegion, RejectsNonSquareK) {
    EXPECT_THROW(make_cluster(GridGeometry(10), 8, {0, 0}), std::invalid_argument);
    EXPECT_THROW(make_cluster(GridGeometry(10), 0, {0, 0}), std::invalid_argument);
}

TEST(MarkedRegion, IsMarked) {
    const auto r = make_cluster(GridGeometry(10), 9, {0, 0});
    EXPECT_TRUE(r.is_marked({1, 2}));
    EXPECT_FALSE(r.is_marked({3, 0}));
    EXPECT_TRUE(make_cluster(GridGeometry(10), 1, {5, 5}).is_marked({5, 5}));
    EXPECT_THROW(r.is_marked({10, 0}), std::out_of_range);
    EXPECT_THROW(r.is_marked({0, -1}), std::out_of_range);
}

TEST(MarkedRegion, MembershipCountEqualsK) {
    for (int side : {3, 5, 8, 12}) {
        const GridGeometry g(side);
        for (int root = 1; root <= side; ++root) {
            for (int ax = 0; ax + root <= side; ax += 2) {
                const auto r = make_cluster(g, root * root, {ax, side - root});
                int count = 0;
                for (int y = 0; y < side; ++y)
                    for (int x = 0; x < side; ++x) count += r.is_marked({x, y});
                EXPECT_EQ(count, root * root);
            }
        }
    }
}

TEST(MarkedRegion, EmptyRegionMarksNothing) {
    const auto r = MarkedRegion::empty(GridGeometry(5));
    EXPECT_EQ(r.k(), 0);
    EXPECT_TRUE(r.cells().empty());
    EXPECT_FALSE(r.is_marked({0, 0}));
}

TEST(WeightPreset, ProposedReducesToWongForSingleCell) {
    EXPECT_DOUBLE_EQ(preset_weight(WeightPreset::Proposed, GridGeometry(10), 1), 0.04);
    for (int side = 2; side <= 40; ++side) {
        const GridGeometry g(side);
        EXPECT_EQ(preset_weight(WeightPreset::Proposed, g, 1),
                  preset_weight(WeightPreset::WongSingle, g, 1));
    }
}

TEST(WeightPreset, ProposedValues) {
    EXPECT_DOUBLE_EQ(preset_weight(WeightPreset::Proposed, GridGeometry(20), 9), 0.001);
    EXPECT_DOUBLE_EQ(preset_weight(WeightPreset::Proposed, GridGeometry(30), 25), 4.0 / (900.0 * 27.0));
}

TEST(WeightPreset, OtherPresets) {
    const GridGeometry g(16);
    EXPECT_EQ(preset_weight(WeightPreset::Zero, g, 4), 0.0);
    EXPECT_DOUBLE_EQ(preset_weight(WeightPreset::WongSingle, g, 4), 4.0 / 256.0);
    EXPECT_DOUBLE_EQ(preset_weight(WeightPreset::QuarterInverse, g, 4), 1.0 / 1024.0);
}

TEST(WeightPreset, ProposedRejectsEvenOrNonSquare) {
    EXPECT_THROW(preset_weight(WeightPreset::Proposed, GridGeometry(10), 4), std::invalid_argument);
    EXPECT_THROW(preset_weight(WeightPreset::Proposed, GridGeometry(10), 7), std::invalid_argument);
}

TEST(WeightPreset, ProposedDecreasesWithK) {
    const GridGeometry g(30);
    double prev = preset_weight(WeightPreset::Proposed, g, 1);
    for (int k : {9, 25, 49}) {
        const double w = preset_weight(WeightPreset::Proposed, g, k);
        EXPECT_LT(w, prev);
        prev = w;
    }
}

TEST(WeightPreset, NamesRoundTrip) {
    for (auto p : {WeightPreset::Zero, WeightPreset::WongSingle, WeightPreset::QuarterInverse,
                   WeightPreset::Proposed})
        EXPECT_EQ(parse_preset(to_string(p)), p);
    EXPECT_THROW(parse_preset("lazy"), std::invalid_argument);
}

TEST(ExactSqrt, PerfectSquares) {
    EXPECT_EQ(exact_sqrt(0), 0);
    EXPECT_EQ(exact_sqrt(49), 7);
    EXPECT_EQ(exact_sqrt(1LL << 50), 1 << 25);
    EXPECT_FALSE(exact_sqrt(50).has_value());
    EXPECT_FALSE(exact_sqrt(-4).has_value());
}
