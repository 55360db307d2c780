#pragma once

// Graph builders, random generators and brute-force checks shared by the tests.
// The checks here are written against definitions only and never call the
// algorithms they are used to validate.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "edgeslide/graph.hpp"
#include "edgeslide/moves.hpp"

namespace testing {

using edgeslide::Edge;
using edgeslide::Graph;
using edgeslide::Vertex;

inline Graph make(int n, std::vector<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph star(int n, int center = 0) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        if (v != center) g.add_edge(center, v);
    return g;
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937& rng) {
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Random labeled tree plus random extra edges; n - 1 <= e <= n(n-1)/2.
inline Graph random_connected(int n, int e, std::mt19937& rng) {
    const auto label = random_permutation(n, rng);
    Graph g(n);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        g.add_edge(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(pick(rng))]);
    }
    std::vector<Edge> missing;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) missing.push_back({u, v});
    std::shuffle(missing.begin(), missing.end(), rng);
    for (int k = 0; g.size() < e; ++k) g.add_edge(missing[static_cast<std::size_t>(k)].u, missing[static_cast<std::size_t>(k)].v);
    return g;
}

/// Connectivity by repeated edge relaxation (union of reachable sets).
inline bool brute_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<bool> reach(static_cast<std::size_t>(g.order()), false);
    reach[0] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (const Edge& e : g.edges())
            if (reach[static_cast<std::size_t>(e.u)] != reach[static_cast<std::size_t>(e.v)]) {
                reach[static_cast<std::size_t>(e.u)] = reach[static_cast<std::size_t>(e.v)] = true;
                changed = true;
            }
    }
    return std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
}

/// Every simple path from a to b avoiding `forbidden`, by exhaustive DFS.
inline std::vector<std::vector<Vertex>> all_simple_paths(const Graph& g, Vertex a, Vertex b,
                                                         std::optional<Edge> forbidden = std::nullopt) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur{a};
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    used[static_cast<std::size_t>(a)] = true;
    std::function<void(Vertex)> go = [&](Vertex u) {
        if (u == b) {
            out.push_back(cur);
            return;
        }
        for (Vertex w = 0; w < g.order(); ++w) {
            if (used[static_cast<std::size_t>(w)] || !g.adjacent(u, w)) continue;
            if (forbidden && Edge::of(u, w) == *forbidden) continue;
            used[static_cast<std::size_t>(w)] = true;
            cur.push_back(w);
            go(w);
            cur.pop_back();
            used[static_cast<std::size_t>(w)] = false;
        }
    };
    go(a);
    return out;
}

/// The interchange of a and b, applied straight from its definition.
inline Graph swap_neighborhoods(const Graph& g, Vertex a, Vertex b) {
    Graph h(g.order());
    auto image = [&](Vertex v) { return v == a ? b : v == b ? a : v; };
    for (const Edge& e : g.edges()) {
        if (Edge::of(e.u, e.v) == Edge::of(a, b)) {
            h.add_edge(a, b);
            continue;
        }
        h.add_edge(image(e.u), image(e.v));
    }
    return h;
}

/// Edge set symmetric difference of two graphs on the same vertex set.
inline std::vector<Edge> edge_diff(const Graph& g, const Graph& h) {
    auto ge = g.edges(), he = h.edges();
    std::vector<Edge> out;
    std::set_symmetric_difference(ge.begin(), ge.end(), he.begin(), he.end(), std::back_inserter(out));
    return out;
}

inline std::vector<Edge> edges_of(std::vector<std::pair<int, int>> list) {
    std::vector<Edge> out;
    for (auto [u, v] : list) out.push_back(Edge::of(u, v));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.rbegin(), d.rend());
    return d;
}

}  // namespace testing
