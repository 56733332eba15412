#include "lqw/vicinity_search.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include "lqw/marked_region.hpp"

namespace lqw {

namespace {

// Walk along one axis until the oracle answers false. Returns the last marked coordinate.
int probe_axis(const MarkOracle& oracle, Cell from, bool horizontal, const GridGeometry& g,
               QueryLog& log, int& counter) {
    Cell pos = from;
    for (int moved = 0;; ++moved) {
        if (moved >= g.side()) {
            throw std::invalid_argument("marked block spans a whole grid axis; corner is undefined");
        }
        Cell next = pos;
        if (horizontal)
            next.x = g.wrap(pos.x - 1);
        else
            next.y = g.wrap(pos.y - 1);
        const bool answer = oracle(next);
        log.queries.push_back({next, answer});
        ++counter;
        if (!answer) return horizontal ? pos.x : pos.y;
        pos = next;
    }
}

}  // namespace

std::pair<Cell, QueryLog> find_corner(const MarkOracle& oracle, Cell start,
                                      const GridGeometry& geometry) {
    if (start.x < 0 || start.y < 0 || start.x >= geometry.side() || start.y >= geometry.side()) {
        throw std::invalid_argument("start cell outside the grid");
    }
    // The start comes from a measurement that already reported it marked; checking it
    // here is a precondition, not a search query.
    if (!oracle(start)) throw std::invalid_argument("vicinity search must start on a marked cell");

    QueryLog log;
    log.start = start;
    const int x0 = probe_axis(oracle, start, true, geometry, log, log.left_queries);
    const int y0 = probe_axis(oracle, Cell{x0, start.y}, false, geometry, log, log.down_queries);
    log.corner = Cell{x0, y0};
    return {log.corner, std::move(log)};
}

std::vector<Cell> enumerate_cluster(Cell corner, int k) {
    auto root = exact_sqrt(k);
    if (k <= 0 || !root) {
        throw std::invalid_argument("k = " + std::to_string(k) + " is not a positive perfect square");
    }
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(k));
    for (int b = 0; b < *root; ++b)
        for (int a = 0; a < *root; ++a) cells.push_back({corner.x + a, corner.y + b});
    return cells;
}

QueryLog locate_cluster(const MarkOracle& oracle, Cell start, const GridGeometry& geometry, int k) {
    auto [corner, log] = find_corner(oracle, start, geometry);
    log.recovered = enumerate_cluster(corner, k);
    return log;
}

namespace {

// Cluster at (1,1) with a one-cell unmarked margin on every side.
MarkedRegion padded_cluster(int k) {
    auto root = exact_sqrt(k);
    if (k <= 0 || !root) {
        throw std::invalid_argument("k = " + std::to_string(k) + " is not a positive perfect square");
    }
    return make_cluster(GridGeometry(*root + 2), k, Cell{1, 1});
}

}  // namespace

double exact_expected_queries(int k) {
    const MarkedRegion region = padded_cluster(k);
    const MarkOracle oracle = [&region](Cell c) { return region.is_marked(c); };
    long long total = 0;
    for (const Cell start : region.cells())
        total += find_corner(oracle, start, region.geometry()).second.query_count();
    return static_cast<double>(total) / static_cast<double>(k);
}

MonteCarloEstimate monte_carlo_queries(int k, std::int64_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const MarkedRegion region = padded_cluster(k);
    const int cs = region.cluster_side();
    const MarkOracle oracle = [&region](Cell c) { return region.is_marked(c); };

    long long sum = 0;
    long long sum_sq = 0;
#pragma omp parallel for schedule(static) reduction(+ : sum, sum_sq)
    for (std::int64_t i = 0; i < trials; ++i) {
        const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
        std::seed_seq seq{lo(seed), lo(seed >> 32), lo(static_cast<std::uint64_t>(i)),
                          lo(static_cast<std::uint64_t>(i) >> 32)};
        std::mt19937_64 rng(seq);
        std::uniform_int_distribution<int> offset(0, cs - 1);
        const int a = offset(rng);
        const int b = offset(rng);
        const Cell start{region.anchor().x + a, region.anchor().y + b};
        const long long q = find_corner(oracle, start, region.geometry()).second.query_count();
        sum += q;
        sum_sq += q * q;
    }

    MonteCarloEstimate est;
    est.trials = trials;
    const double n = static_cast<double>(trials);
    est.mean = static_cast<double>(sum) / n;
    if (trials > 1) {
        const double var = (static_cast<double>(sum_sq) - n * est.mean * est.mean) / (n - 1.0);
        est.stderr_mean = std::sqrt(std::max(var, 0.0) / n);
    }
    return est;
}

void write_query_log_csv(const QueryLog& log, std::ostream& out) {
    out << "index,x,y,answer\n";
    for (std::size_t i = 0; i < log.queries.size(); ++i) {
        const auto& q = log.queries[i];
        out << i << ',' << q.cell.x << ',' << q.cell.y << ',' << (q.answer ? 1 : 0) << '\n';
    }
}

}  // namespace lqw
