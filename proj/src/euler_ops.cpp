#include "edgeslide/euler_ops.hpp"

#include <algorithm>

#include "edgeslide/prescribe.hpp"
#include "edgeslide/slide_calculus.hpp"

namespace edgeslide {

namespace {

std::int64_t complete_edges(int n) { return std::int64_t{n} * (n - 1) / 2; }

}  // namespace

MoveScript expand_to_order(const Graph& g, int target_n) {
    if (target_n < g.order())
        throw PreconditionError("expand_to_order: target order " + std::to_string(target_n) + " below current " +
                                std::to_string(g.order()));
    if (target_n > g.order() && g.order() == 0) throw PreconditionError("expand_to_order: empty graph has no anchor");
    if (!is_connected(g)) throw PreconditionError("expand_to_order: graph is disconnected");
    MoveScript s;
    for (int n = g.order(); n < target_n; ++n) s.push(AddPendant{0, n});
    return s;
}

std::pair<MoveScript, MoveScript> pendant_subdivide_equivalence(const Graph& g, Vertex z, Vertex x) {
    if (!g.valid(z) || !g.valid(x) || z == x || !g.adjacent(z, x))
        throw PreconditionError("pendant_subdivide_equivalence: {" + std::to_string(z) + "," + std::to_string(x) +
                                "} is not an edge");
    const Vertex y = g.order();
    MoveScript subdivided;
    subdivided.push(Subdivide{x, z, y});
    MoveScript pendant;
    pendant.push(AddPendant{x, y});
    pendant.push(Slide{z, x, y});
    return {subdivided, pendant};
}

MoveScript collapse_to_order(const Graph& g, int target_n) {
    if (target_n < 1 || target_n > g.order())
        throw PreconditionError("collapse_to_order: target order must be in 1.." + std::to_string(g.order()));
    if (!is_connected(g)) throw PreconditionError("collapse_to_order: graph is disconnected");
    const int chi = euler_characteristic(g);
    for (int order = g.order() - 1; order >= target_n; --order)
        if (order - chi > complete_edges(order))
            throw PreconditionError("collapse_to_order: " + std::to_string(order - chi) +
                                    " edges do not fit a simple graph on " + std::to_string(order) + " vertices");

    ScriptRecorder rec(g);
    while (rec.graph().order() > target_n) {
        const Vertex victim = 0;
        while (rec.graph().degree(victim) > 1) {
            const Graph& cur = rec.graph();
            const ComponentPartition comps = connected_components(cur, victim);
            const Vertex a = cur.neighbors(victim).front();
            std::optional<Edge> pair;
            if (comps.count() >= 2) {
                // take an edge into the first component and use it as a bridge
                const auto nbrs = cur.neighbors(victim);
                auto into_first =
                    std::find_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return comps.group_of(w) == 0; });
                rec.extend(move_edge(cur, Edge::of(victim, *into_first), comps.groups[0].front(),
                                     comps.groups[1].front()));
                continue;
            }
            const auto& c = comps.groups.front();
            for (std::size_t i = 0; i < c.size() && !pair; ++i)
                for (std::size_t j = i + 1; j < c.size() && !pair; ++j)
                    if (!cur.adjacent(c[i], c[j])) pair = Edge{c[i], c[j]};
            if (!pair) throw InvariantViolation("collapse_to_order: complement of the victim is complete");
            rec.extend(move_edge(cur, Edge::of(victim, a), pair->u, pair->v));
        }
        rec.push(RemoveLeaf{victim, rec.graph().neighbors(victim).front()});
    }
    return std::move(rec).take_script();
}

EulerPlan transform_euler(const Graph& gamma, const Graph& sigma) {
    if (!is_connected(gamma) || !is_connected(sigma))
        throw PreconditionError("transform_euler: input is disconnected");
    if (euler_characteristic(gamma) != euler_characteristic(sigma))
        throw PreconditionError("transform_euler: Euler characteristics differ (" +
                                std::to_string(euler_characteristic(gamma)) + " vs " +
                                std::to_string(euler_characteristic(sigma)) + ")");
    EulerPlan plan;
    plan.script = gamma.order() <= sigma.order() ? expand_to_order(gamma, sigma.order())
                                                 : collapse_to_order(gamma, sigma.order());
    const Graph aligned = apply_script(gamma, plan.script);
    plan.map = VertexBijection::identity(sigma.order());
    plan.script.append(transform(aligned, sigma, plan.map).script);

    if (!is_isomorphic_under(replay(gamma, plan.script, CheckLevel::full), sigma, plan.map))
        throw InvariantViolation("transform_euler: replayed plan does not reach the target");
    return plan;
}

}  // namespace edgeslide
