#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgeslide/error.hpp"

namespace edgeslide {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    /// Normalizes the endpoint order; does not reject loops.
    static Edge of(Vertex a, Vertex b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }

    bool contains(Vertex w) const noexcept { return w == u || w == v; }
    Vertex other(Vertex w) const noexcept { return w == u ? v : u; }

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on the dense vertex ids 0..n-1.
///
/// Neighbor lists are kept sorted, so every traversal sees neighbors in
/// ascending id order and edges() comes out in canonical (u, v) order.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws PreconditionError on loops, duplicates or out-of-range ids.
    Graph(int n, const std::vector<Edge>& edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    int size() const noexcept { return edge_count_; }

    int degree(Vertex v) const { return static_cast<int>(adj_[check(v)].size()); }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[check(v)]; }
    bool adjacent(Vertex a, Vertex b) const;
    bool valid(Vertex v) const noexcept { return v >= 0 && v < order(); }

    /// Sorted lexicographically by (u, v).
    std::vector<Edge> edges() const;

    void add_edge(Vertex a, Vertex b);
    void remove_edge(Vertex a, Vertex b);
    /// Appends an isolated vertex and returns its id.
    Vertex add_vertex();
    /// Deletes v with its incident edges; ids above v shift down by one.
    void remove_vertex(Vertex v);

    /// Throws InvariantViolation if the neighbor lists are inconsistent.
    void check_invariants() const;

    bool operator==(const Graph&) const = default;

private:
    std::size_t check(Vertex v) const;

    std::vector<std::vector<Vertex>> adj_;
    int edge_count_ = 0;
};

/// Vertex sequence with consecutive vertices adjacent.
struct Path {
    std::vector<Vertex> vertices;

    std::size_t size() const noexcept { return vertices.size(); }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    Vertex operator[](std::size_t i) const { return vertices[i]; }
    bool contains(Vertex v) const;
    /// Position of v, or -1.
    int index_of(Vertex v) const;
    Path reversed() const;

    bool operator==(const Path&) const = default;
};

/// Connected groups of a vertex subset, ordered by smallest member.
struct ComponentPartition {
    std::vector<std::vector<Vertex>> groups;

    std::size_t count() const noexcept { return groups.size(); }
    /// Index of the group containing v, or -1.
    int group_of(Vertex v) const;
};

/// Bijection between the vertex sets of two graphs of equal order.
class VertexBijection {
public:
    VertexBijection() = default;
    /// Throws PreconditionError unless forward is a permutation of 0..n-1.
    explicit VertexBijection(std::vector<Vertex> forward);

    static VertexBijection identity(int n);

    int size() const noexcept { return static_cast<int>(forward_.size()); }
    Vertex operator()(Vertex v) const { return forward_.at(static_cast<std::size_t>(v)); }
    VertexBijection inverse() const;
    const std::vector<Vertex>& forward() const noexcept { return forward_; }

    bool operator==(const VertexBijection&) const = default;

private:
    std::vector<Vertex> forward_;
};

struct GraphStats {
    int n = 0;
    int e = 0;
    std::vector<int> degrees;
    std::int64_t energy = 0;
    int euler_characteristic = 0;
    int curvature_sum = 0;
};

// ---- traversals ----

bool is_connected(const Graph& g);

/// BFS shortest path from a to b that does not use `forbidden`; neighbors are
/// expanded in ascending id order so the result is reproducible.
std::optional<Path> shortest_path(const Graph& g, Vertex a, Vertex b,
                                  std::optional<Edge> forbidden = std::nullopt);

/// Components of g with `excluded` (if any) deleted.
ComponentPartition connected_components(const Graph& g,
                                        std::optional<Vertex> excluded = std::nullopt);

/// BFS spanning tree rooted at `root`, sorted. Throws if g is disconnected.
std::vector<Edge> spanning_tree(const Graph& g, Vertex root);

GraphStats stats(const Graph& g);

/// Sum of squared degrees.
std::int64_t energy(const Graph& g);

inline int euler_characteristic(const Graph& g) { return g.order() - g.size(); }

/// True iff x ~ y in g exactly when psi(x) ~ psi(y) in h.
bool is_isomorphic_under(const Graph& g, const Graph& h, const VertexBijection& psi);

/// Copy of g with vertex v deleted and ids compacted.
Graph without_vertex(const Graph& g, Vertex v);

// ---- .elist / bijection formats ----

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// Lines `m <src> <dst>`; every id in 0..n-1 must appear once on each side.
VertexBijection parse_bijection(std::string_view text, int n);
std::string serialize_bijection(const VertexBijection& psi);

std::string to_string(const Edge& e);
std::string to_string(const GraphStats& s);

}  // namespace edgeslide
