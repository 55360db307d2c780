#pragma once

#include "edgeslide/graph.hpp"
#include "edgeslide/moves.hpp"

namespace edgeslide {

/// Slides {y, p[0]} to {y, p.back()} one path edge at a time.
/// Requires y not on p, y ~ p[0] and y !~ p[i] for i >= 1.
MoveScript slide_along_path(const Graph& g, Vertex y, const Path& p);

/// Moves y's adjacency at p[from] to p[to] while every other adjacency of y
/// to the path (and everything off the path) ends up unchanged.
///
/// y's neighbors on the path between the two positions are treated as
/// tokens: the token nearest `to` is walked onto `to` first, then the next
/// one onto the slot just vacated, and so on back to `from`. This takes
/// exactly |to - from| slides. Requires y not on p, y ~ p[from], y !~ p[to].
MoveScript shuffle(const Graph& g, Vertex y, const Path& p, std::size_t from, std::size_t to);

/// Paths x -> u' and y -> v' avoiding edge uv, where {u', v'} = {u, v}.
struct TransferPaths {
    Path x_path;
    Path y_path;
    Vertex u;  // endpoint reached from x
    Vertex v;  // endpoint reached from y
    bool swapped;
};

/// u' is the endpoint of uv nearest to x in g - uv (ties keep the given
/// order); both paths are BFS shortest paths in g - uv. Requires g connected,
/// uv an edge, {x, y} not an edge of g - uv, and g - uv + xy connected.
TransferPaths find_transfer_paths(const Graph& g, Edge uv, Vertex x, Vertex y);

/// Slide script whose net effect is g - uv + xy. Requires g connected,
/// uv an edge, x !~ y, and g - uv + xy connected.
MoveScript move_edge(const Graph& g, Edge uv, Vertex x, Vertex y);

/// Slide script exchanging the neighborhoods of a and b (the a-b adjacency
/// itself and every edge not incident to a or b stay put). Requires g connected.
MoveScript interchange(const Graph& g, Vertex a, Vertex b);

}  // namespace edgeslide
