#pragma once

#include <vector>

#include "edgeslide/graph.hpp"
#include "edgeslide/moves.hpp"

namespace edgeslide {

/// Slides a tree into the star centered at x. Every intermediate graph is a
/// tree. Throws PreconditionError if t is not a tree.
MoveScript raise_degree_in_tree(const Graph& t, Vertex x);

/// Slides a connected graph until d(x) = n - 1.
///
/// A BFS spanning tree rooted at x is driven to the star by
/// raise_degree_in_tree; each tree slide is mirrored in the graph unless the
/// graph already holds the target edge. The tree stays a subgraph
/// throughout, so the graph ends with x adjacent to every vertex.
MoveScript raise_degree(const Graph& g, Vertex x);

/// One level of the vertex-by-vertex reduction. Vertex ids are local to the
/// level (each level works on the graphs with earlier levels' vertices
/// removed and ids compacted).
struct LevelTrace {
    int order = 0;
    Vertex sigma_vertex = 0;   // minimum-degree vertex of the target
    Vertex gamma_vertex = 0;   // its preimage
    int min_degree = 0;
    MoveScript gamma_script;   // slides on gamma before recursing
    MoveScript sigma_repair;   // slides on sigma making sigma - y connected
    MoveScript undo_repair;    // sigma_repair inverted and pulled back to gamma ids
};

struct TransformPlan {
    MoveScript script;               // slides on gamma's ids
    std::vector<LevelTrace> trace;   // outermost level first
};

/// Slide script turning gamma into a graph G with G ~psi~ sigma.
///
/// Requires both graphs connected with equal vertex and edge counts. The
/// returned script is replayed and checked against sigma before returning.
TransformPlan transform(const Graph& gamma, const Graph& sigma, const VertexBijection& psi);

}  // namespace edgeslide
