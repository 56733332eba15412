#include <cmath>
#include <sstream>

#include "lqw/experiment.hpp"
#include "lqw/reference_oracle.hpp"

namespace lqw {

namespace {

CheckResult check(std::string name, bool ok, const std::string& detail) {
    return {std::move(name), ok, detail};
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

}  // namespace

std::vector<CheckResult> run_verification() {
    std::vector<CheckResult> results;

    // Fast engine against the dense matrix, every anchor that fits.
    {
        double worst = 0.0;
        int cases = 0;
        for (int side : {2, 3, 4}) {
            const GridGeometry g(side);
            const double n = static_cast<double>(g.cell_count());
            for (int k : {1, 4, 9}) {
                const int cs = static_cast<int>(std::lround(std::sqrt(k)));
                if (cs > side) continue;
                std::vector<double> weights = {0.0, 4.0 / n};
                if (k % 2 == 1) weights.push_back(preset_weight(WeightPreset::Proposed, g, k));
                for (int ay = 0; ay + cs <= side; ++ay)
                    for (int ax = 0; ax + cs <= side; ++ax)
                        for (double l : weights)
                            for (auto coin : {MarkedCoin::NegatedGrover, MarkedCoin::NegatedIdentity}) {
                                const MarkedRegion region = make_cluster(g, k, {ax, ay});
                                const auto u = reference::build_step_matrix(g, region, l, coin);
                                auto dense = reference::dense_uniform_vector(g, l);
                                WalkState state = new_uniform_state(g, l);
                                const StepConfig step(region, l, coin);
                                for (int t = 1; t <= 25; ++t) {
                                    walk_step(state, step);
                                    dense = reference::dense_evolve(u, std::move(dense), 1);
                                    worst = std::max(worst, max_abs_difference(state.amplitudes(), dense));
                                }
                                ++cases;
                            }
            }
        }
        results.push_back(check("engine matches dense oracle (25 steps)", worst <= 1e-12,
                                std::to_string(cases) + " cases, max diff " + fmt(worst)));
    }

    {
        const GridGeometry g(30);
        const MarkedRegion region = make_cluster(g, 9, {0, 0});
        const double l = preset_weight(WeightPreset::Proposed, g, 9);
        WalkState state = new_uniform_state(g, l);
        const StepConfig step(region, l);
        for (int t = 0; t < 10000; ++t) walk_step(state, step);
        const double drift = std::abs(total_norm(state) - 1.0);
        results.push_back(check("norm conserved over 1e4 steps (side 30)", drift <= 1e-10,
                                "drift " + fmt(drift)));
    }

    for (double l : {0.0, 0.01}) {
        const double dev = stationarity_deviation(GridGeometry(10), l, 100);
        results.push_back(check("unmarked walk stationary (l=" + std::to_string(l) + ")",
                                dev <= 1e-12, "max change " + fmt(dev)));
    }

    {
        double worst = 0.0;
        for (double l : {0.0, 1e-6, 4.0 / 900, 1.0 / 3600, 4.0 / 9000, 1.0, 4.0}) {
            const CoinOperator d = grover_coin(l);
            for (int i = 0; i < kCoinDim; ++i)
                for (int j = 0; j < kCoinDim; ++j) {
                    double acc = 0.0;
                    for (int m = 0; m < kCoinDim; ++m) acc += d.entry(i, m) * d.entry(j, m);
                    worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
                }
        }
        results.push_back(check("Grover coin orthogonal", worst <= 1e-14, "max error " + fmt(worst)));
    }

    {
        const GridGeometry g(7);
        WalkState state(g, 0.0);
        auto amps = state.amplitudes();
        for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = {double(i), -0.5 * double(i)};
        const WalkState original = state;
        apply_flip_flop_shift(state);
        apply_flip_flop_shift(state);
        results.push_back(check("flip-flop shift is an involution", state == original, ""));
    }

    {
        const GridGeometry g(24);
        const MarkedRegion region = make_cluster(g, 9, {5, 7});
        const double l = preset_weight(WeightPreset::Proposed, g, 9);
        WalkState a = new_uniform_state(g, l);
        WalkState b = a;
        const StepConfig serial(region, l, MarkedCoin::NegatedGrover, Backend::Serial);
        const StepConfig parallel(region, l, MarkedCoin::NegatedGrover, Backend::OpenMP);
        for (int t = 0; t < 200; ++t) {
            walk_step(a, serial);
            walk_step(b, parallel);
        }
        results.push_back(check("OpenMP kernels bit-identical to serial", a == b, ""));
    }

    {
        bool ok = true;
        std::string detail;
        for (int k : {1, 9, 25, 49}) {
            const double e = exact_expected_queries(k);
            const double want = std::sqrt(double(k)) + 1.0;
            ok = ok && std::abs(e - want) < 1e-12;
            detail += "k=" + std::to_string(k) + ":" + std::to_string(e) + " ";
        }
        results.push_back(check("expected vicinity queries = sqrt(k)+1", ok, detail));
    }
    return results;
}

}  // namespace lqw
