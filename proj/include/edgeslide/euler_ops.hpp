#pragma once

#include <utility>

#include "edgeslide/graph.hpp"
#include "edgeslide/moves.hpp"

namespace edgeslide {

/// AddPendant moves at vertex 0 until the graph has target_n vertices.
MoveScript expand_to_order(const Graph& g, int target_n);

/// Two routes to the same graph for edge {z, x}:
/// first  = [Subdivide(x, z, y)],
/// second = [AddPendant(x, y), Slide(z, x, y)], with y = n.
std::pair<MoveScript, MoveScript> pendant_subdivide_equivalence(const Graph& g, Vertex z, Vertex x);

/// Shrinks g to target_n vertices at constant Euler characteristic: the
/// smallest-id vertex is slid down to degree 1 and removed as a leaf, repeatedly.
/// Throws PreconditionError if some intermediate order could not hold the
/// required edges in a simple graph.
MoveScript collapse_to_order(const Graph& g, int target_n);

struct EulerPlan {
    MoveScript script;
    VertexBijection map;  // replayed result -> sigma
};

/// Expands or collapses gamma to sigma's order, then slides it onto sigma.
/// The map is the identity; the plan is replay-checked before returning.
EulerPlan transform_euler(const Graph& gamma, const Graph& sigma);

}  // namespace edgeslide
