#include "edgeslide/prescribe.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

#include "edgeslide/slide_calculus.hpp"

namespace edgeslide {

namespace {

std::string id(Vertex v) { return std::to_string(v); }

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

int edges_within(const Graph& g, const std::vector<Vertex>& group) {
    int twice = 0;
    for (Vertex v : group)
        for (Vertex w : g.neighbors(v))
            if (std::binary_search(group.begin(), group.end(), w)) ++twice;
    return twice / 2;
}

// First back edge met by a DFS over `group` from its smallest vertex,
// neighbors in ascending order.
std::optional<Edge> first_back_edge(const Graph& g, const std::vector<Vertex>& group) {
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -2);
    auto inside = [&](Vertex w) { return std::binary_search(group.begin(), group.end(), w); };
    std::function<std::optional<Edge>(Vertex)> visit = [&](Vertex u) -> std::optional<Edge> {
        for (Vertex w : g.neighbors(u)) {
            if (!inside(w) || w == parent[static_cast<std::size_t>(u)]) continue;
            if (parent[static_cast<std::size_t>(w)] != -2) return Edge::of(u, w);
            parent[static_cast<std::size_t>(w)] = u;
            if (auto found = visit(w)) return found;
        }
        return std::nullopt;
    };
    parent[static_cast<std::size_t>(group.front())] = -1;
    return visit(group.front());
}

std::optional<Edge> smallest_non_adjacent_pair(const Graph& g, const std::vector<Vertex>& group) {
    for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = i + 1; j < group.size(); ++j)
            if (!g.adjacent(group[i], group[j])) return Edge{group[i], group[j]};
    return std::nullopt;
}

bool stays_connected(const Graph& g, Edge uv, Edge xy) {
    Graph h = g;
    h.remove_edge(uv.u, uv.v);
    h.add_edge(xy.u, xy.v);
    return is_connected(h);
}

// Lowers d(x) to `target` by relocating x's edges into the complement of x,
// joining complement components first.
void reduce_degree(ScriptRecorder& rec, Vertex x, int target) {
    while (rec.graph().degree(x) > target) {
        const Graph& g = rec.graph();
        const ComponentPartition comps = connected_components(g, x);
        if (comps.count() >= 2) {
            const auto nbrs = g.neighbors(x);
            auto a = std::find_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return comps.group_of(w) == 0; });
            if (a == nbrs.end()) throw InvariantViolation("reduce_degree: first component not attached to x");
            rec.extend(move_edge(g, Edge::of(x, *a), comps.groups[0].front(), comps.groups[1].front()));
            continue;
        }
        const auto pair = smallest_non_adjacent_pair(g, comps.groups.front());
        if (!pair)
            throw InvariantViolation("reduce_degree: complement of " + id(x) +
                                     " is complete while d(x) exceeds the target degree");
        bool moved = false;
        for (Vertex a : g.neighbors(x)) {
            if (!stays_connected(g, Edge::of(x, a), *pair)) continue;
            rec.extend(move_edge(g, Edge::of(x, a), pair->u, pair->v));
            moved = true;
            break;
        }
        if (!moved) throw InvariantViolation("reduce_degree: no edge at " + id(x) + " can be relocated");
    }
}

// Interchanges vertices until N(x) equals `wanted` (sorted, x not in it).
void match_neighborhood(ScriptRecorder& rec, Vertex x, const std::vector<Vertex>& wanted) {
    for (;;) {
        const auto nbrs = rec.graph().neighbors(x);
        std::vector<Vertex> extra, missing;
        std::set_difference(nbrs.begin(), nbrs.end(), wanted.begin(), wanted.end(), std::back_inserter(extra));
        std::set_difference(wanted.begin(), wanted.end(), nbrs.begin(), nbrs.end(), std::back_inserter(missing));
        if (extra.empty() && missing.empty()) return;
        if (extra.size() != missing.size())
            throw InvariantViolation("match_neighborhood: degree of " + id(x) + " differs from target");
        rec.extend(interchange(rec.graph(), extra.front(), missing.front()));
    }
}

// Slides (never touching the final neighborhood of x) after which g - x is connected.
MoveScript connect_complement(const Graph& g, Vertex x) {
    ScriptRecorder rec(g);
    for (;;) {
        const Graph& cur = rec.graph();
        const ComponentPartition comps = connected_components(cur, x);
        if (comps.count() <= 1) break;
        std::size_t with_cycle = comps.count();
        for (std::size_t i = 0; i < comps.count(); ++i)
            if (edges_within(cur, comps.groups[i]) >= static_cast<int>(comps.groups[i].size())) {
                with_cycle = i;
                break;
            }
        if (with_cycle == comps.count())
            throw InvariantViolation("connect_complement: every component of g - " + id(x) + " is a tree");
        const Edge cycle_edge = *first_back_edge(cur, comps.groups[with_cycle]);
        const std::size_t other = with_cycle == 0 ? 1 : 0;
        rec.extend(move_edge(cur, cycle_edge, comps.groups[with_cycle].front(), comps.groups[other].front()));
    }
    return std::move(rec).take_script();
}

std::vector<Vertex> as_vector(std::span<const Vertex> s) { return {s.begin(), s.end()}; }

MoveScript solve(const Graph& gamma, const Graph& sigma, const VertexBijection& psi, std::vector<LevelTrace>& trace) {
    const int n = gamma.order();
    if (n <= 2) return {};

    Vertex y = 0;
    for (Vertex v = 1; v < n; ++v)
        if (sigma.degree(v) < sigma.degree(y)) y = v;
    const int d1 = sigma.degree(y);
    const VertexBijection inv = psi.inverse();
    const Vertex x = inv(y);

    // Step 1: give x exactly the preimage of y's neighborhood.
    ScriptRecorder rec(gamma);
    rec.extend(raise_degree(gamma, x));
    reduce_degree(rec, x, d1);
    std::vector<Vertex> wanted;
    for (Vertex w : sigma.neighbors(y)) wanted.push_back(inv(w));
    std::sort(wanted.begin(), wanted.end());
    match_neighborhood(rec, x, wanted);

    // Step 2: make both complements connected.
    rec.extend(connect_complement(rec.graph(), x));
    ScriptRecorder sigma_rec(sigma);
    sigma_rec.extend(connect_complement(sigma, y));

    if (as_vector(rec.graph().neighbors(x)) != wanted)
        throw InvariantViolation("transform: neighborhood of " + id(x) + " drifted during repair");
    if (!std::ranges::equal(sigma_rec.graph().neighbors(y), sigma.neighbors(y)))
        throw InvariantViolation("transform: neighborhood of " + id(y) + " drifted during repair");

    const Graph gamma_rest = without_vertex(rec.graph(), x);
    const Graph sigma_rest = without_vertex(sigma_rec.graph(), y);
    if (!is_connected(gamma_rest) || !is_connected(sigma_rest))
        throw InvariantViolation("transform: complement still disconnected after repair");

    std::vector<Vertex> lift(static_cast<std::size_t>(n - 1));
    std::vector<Vertex> sub_forward(static_cast<std::size_t>(n - 1));
    for (Vertex i = 0; i < n - 1; ++i) {
        lift[static_cast<std::size_t>(i)] = i < x ? i : i + 1;
        const Vertex image = psi(lift[static_cast<std::size_t>(i)]);
        sub_forward[static_cast<std::size_t>(i)] = image < y ? image : image - 1;
    }

    const std::size_t slot = trace.size();
    trace.push_back({n, y, x, d1, rec.script(), sigma_rec.script(), {}});

    MoveScript sub = solve(gamma_rest, sigma_rest, VertexBijection(std::move(sub_forward)), trace);
    rec.extend(relabel(sub, lift));

    MoveScript undo = relabel(invert_slides(sigma_rec.script()), inv.forward());
    rec.extend(undo);
    trace[slot].undo_repair = std::move(undo);

    if (!is_isomorphic_under(rec.graph(), sigma, psi))
        throw InvariantViolation("transform: level of order " + std::to_string(n) + " does not match target");
    return std::move(rec).take_script();
}

}  // namespace

MoveScript raise_degree_in_tree(const Graph& t, Vertex x) {
    if (!t.valid(x)) throw PreconditionError("raise_degree_in_tree: vertex out of range");
    if (!is_tree(t)) throw PreconditionError("raise_degree_in_tree: input is not a tree");
    const int n = t.order();
    ScriptRecorder rec(t);
    while (rec.graph().degree(x) < n - 1) {
        const Graph& g = rec.graph();
        Vertex leaf = -1;
        for (Vertex v = 0; v < n && leaf < 0; ++v)
            if (v != x && g.degree(v) == 1 && !g.adjacent(v, x)) leaf = v;
        if (leaf < 0) throw InvariantViolation("raise_degree_in_tree: no leaf away from " + id(x));
        const Path toward = *shortest_path(g, g.neighbors(leaf).front(), x);
        rec.extend(slide_along_path(g, leaf, toward));
    }
    return std::move(rec).take_script();
}

MoveScript raise_degree(const Graph& g, Vertex x) {
    if (!g.valid(x)) throw PreconditionError("raise_degree: vertex out of range");
    if (!is_connected(g)) throw PreconditionError("raise_degree: graph is disconnected");
    const int n = g.order();
    if (g.degree(x) == n - 1) return {};

    Graph tree(n, spanning_tree(g, x));
    const MoveScript tree_script = raise_degree_in_tree(tree, x);
    ScriptRecorder rec(g);
    for (const Move& m : tree_script.moves) {
        const Slide& s = std::get<Slide>(m);
        apply_move_in_place(tree, s);
        if (!rec.graph().adjacent(s.pivot, s.to)) rec.push(s);
    }
    for (const Edge& e : tree.edges())
        if (!rec.graph().adjacent(e.u, e.v)) throw InvariantViolation("raise_degree: tree left the graph");
    return std::move(rec).take_script();
}

TransformPlan transform(const Graph& gamma, const Graph& sigma, const VertexBijection& psi) {
    if (gamma.order() != sigma.order() || gamma.size() != sigma.size())
        throw PreconditionError("transform: graphs differ in vertex or edge count");
    if (psi.size() != gamma.order()) throw PreconditionError("transform: bijection has the wrong size");
    if (!is_connected(gamma) || !is_connected(sigma)) throw PreconditionError("transform: input is disconnected");

    TransformPlan plan;
    plan.script = solve(gamma, sigma, psi, plan.trace);
    if (!is_isomorphic_under(apply_script(gamma, plan.script), sigma, psi))
        throw InvariantViolation("transform: replayed script does not reach the target");
    return plan;
}

}  // namespace edgeslide
