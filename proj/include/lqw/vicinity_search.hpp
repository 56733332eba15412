#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "lqw/grid.hpp"

namespace lqw {

/// Classical membership oracle: true iff the cell is marked.
using MarkOracle = std::function<bool(Cell)>;

struct Query {
    Cell cell;
    bool answer = false;
};

/// Transcript of one vicinity search.
struct QueryLog {
    Cell start;
    std::vector<Query> queries;  // leftward probes first, then downward probes
    int left_queries = 0;
    int down_queries = 0;
    Cell corner;
    std::vector<Cell> recovered;  // filled by locate_cluster

    int query_count() const noexcept { return static_cast<int>(queries.size()); }
};

/// From a marked start, probe leftwards one cell at a time until the first unmarked answer,
/// then downwards from that column the same way. Neighbours wrap around the torus. The
/// terminating unmarked probe is counted, so a start at offset (a, b) inside the cluster
/// costs (a + 1) + (b + 1) queries.
///
/// Throws std::invalid_argument if the start is unmarked or the marked block covers a whole
/// row or column (no boundary to find).
std::pair<Cell, QueryLog> find_corner(const MarkOracle& oracle, Cell start,
                                      const GridGeometry& geometry);

/// The √k × √k block with lower-left cell `corner`, in row-major order.
std::vector<Cell> enumerate_cluster(Cell corner, int k);

/// find_corner followed by enumerate_cluster.
QueryLog locate_cluster(const MarkOracle& oracle, Cell start, const GridGeometry& geometry, int k);

/// Average boundary query count over every start cell of a √k × √k cluster, by enumeration.
double exact_expected_queries(int k);

struct MonteCarloEstimate {
    double mean = 0.0;
    double stderr_mean = 0.0;
    std::int64_t trials = 0;
};

/// Uniformly random start cells; trial i draws from its own generator seeded by (seed, i),
/// so the result does not depend on thread count.
MonteCarloEstimate monte_carlo_queries(int k, std::int64_t trials, std::uint64_t seed);

/// CSV `index,x,y,answer` with answer 0/1.
void write_query_log_csv(const QueryLog& log, std::ostream& out);

}  // namespace lqw
