#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "edgeslide/graph.hpp"
#include "edgeslide/moves.hpp"

namespace edgeslide {

/// Degree multiset with r vertices of degree k + 1 and n - r of degree k,
/// where 2e = n*k + r and 0 <= r < n.
struct DegreeTarget {
    int n = 0;
    int k = 0;
    int r = 0;

    /// Non-increasing.
    std::vector<int> degrees() const;
    std::int64_t energy() const;

    bool operator==(const DegreeTarget&) const = default;
};

/// Throws PreconditionError unless n >= 1 and n - 1 <= e <= n(n-1)/2.
DegreeTarget almost_regular_target(int n, int e);

/// One energy-decreasing step: an edge at `high` is handed over to `low`.
struct RegularizeStep {
    Vertex high;
    Vertex low;
    int high_degree;  // before the step
    int low_degree;
    std::int64_t energy_before;
    std::int64_t energy_after;
    std::size_t first_move;  // index into the script
    std::size_t move_count;
};

struct RegularizeResult {
    MoveScript script;
    std::vector<RegularizeStep> steps;
    Graph final_graph;
};

/// Slides a connected graph to an almost regular one (all degrees within 1).
/// Each step takes the highest-degree and lowest-degree vertices (smallest
/// ids on ties) and moves one edge from the first to the second, lowering
/// the energy by exactly 2(d(high) - d(low) - 1).
RegularizeResult regularize_traced(const Graph& g);

MoveScript regularize(const Graph& g);

/// Brute force over all positive integer sequences of length n summing to
/// 2e (enumerated as non-increasing sequences); returns those of least sum
/// of squares, each sorted non-increasing. Requires 1 <= n <= 10, e >= 1.
std::set<std::vector<int>> minimal_energy_oracle(int n, int e);

}  // namespace edgeslide
