#pragma once

#include <string>
#include <vector>

#include "edgeslide/graph.hpp"

namespace edgeslide::oracle {

inline constexpr int kEnumerationCap = 7;
inline constexpr int kCensusCap = 5;

/// Every connected simple labeled graph with exactly n vertices and e edges,
/// in lexicographic order of the sorted edge lists. Requires n <= 7.
std::vector<Graph> enumerate_connected(int n, int e);

/// Every graph one legal slide away from g, deduplicated, lexicographic order.
std::vector<Graph> slide_neighbors(const Graph& g);

struct Census {
    int n = 0;
    int e = 0;
    std::size_t members = 0;
    std::size_t classes = 0;
    int diameter = 0;  // largest minimal slide distance within a class
};

/// BFS over the single-slide relation on enumerate_connected(n, e).
/// Requires n <= 5.
Census reachability_census(int n, int e);

/// Minimal number of slides from a to b (same n and e, both connected),
/// or -1 if b is unreachable. Requires n <= 5.
int slide_distance(const Graph& a, const Graph& b);

/// Plain-text table with columns n, e, members, classes, diameter.
std::string format_census(const std::vector<Census>& rows);

}  // namespace edgeslide::oracle
