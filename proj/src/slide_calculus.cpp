#include "edgeslide/slide_calculus.hpp"

#include <algorithm>
#include <utility>

namespace edgeslide {

namespace {

std::string id(Vertex v) { return std::to_string(v); }

void require_path(const Graph& g, const Path& p, const char* op) {
    if (p.size() == 0) throw PreconditionError(std::string(op) + ": empty path");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!g.valid(p[i])) throw PreconditionError(std::string(op) + ": path vertex out of range at index " + id(int(i)));
        if (std::count(p.vertices.begin(), p.vertices.end(), p[i]) != 1)
            throw PreconditionError(std::string(op) + ": path repeats vertex " + id(p[i]));
        if (i + 1 < p.size() && !g.adjacent(p[i], p[i + 1]))
            throw PreconditionError(std::string(op) + ": path vertices " + id(int(i)) + " and " + id(int(i + 1)) +
                                    " are not adjacent");
    }
}

Path slice(const Path& p, std::size_t first, std::size_t last) {
    Path out;
    if (first <= last)
        for (std::size_t i = first; i <= last; ++i) out.vertices.push_back(p[i]);
    else
        for (std::size_t i = first + 1; i-- > last;) out.vertices.push_back(p[i]);
    return out;
}

Graph with_moved_edge(const Graph& g, Edge uv, Vertex x, Vertex y) {
    Graph h = g;
    h.remove_edge(uv.u, uv.v);
    if (!h.adjacent(x, y)) h.add_edge(x, y);
    return h;
}

// Relocates {p, a} to {p, b}. tau is the shortest b -> a path avoiding {p, a}.
MoveScript move_shared_endpoint(const Graph& g, Vertex p, Vertex a, Vertex b, const Path& tau) {
    ScriptRecorder rec(g);
    const int at = tau.index_of(p);
    if (at < 0) {
        Path along = tau.reversed();
        rec.extend(shuffle(g, p, along, 0, along.size() - 1));
    } else {
        // p sits on tau: first pull a over to b, then walk b's new edge back to p.
        const auto i = static_cast<std::size_t>(at);
        rec.extend(slide_along_path(rec.graph(), a, slice(tau, i, 0)));
        rec.extend(slide_along_path(rec.graph(), b, slice(tau, tau.size() - 1, i)));
    }
    return std::move(rec).take_script();
}

}  // namespace

MoveScript slide_along_path(const Graph& g, Vertex y, const Path& p) {
    require_path(g, p, "slide_along_path");
    if (!g.valid(y)) throw PreconditionError("slide_along_path: pivot out of range");
    if (p.contains(y)) throw PreconditionError("slide_along_path: pivot lies on the path at index " + id(p.index_of(y)));
    if (!g.adjacent(y, p.front())) throw PreconditionError("slide_along_path: pivot not adjacent to index 0");
    for (std::size_t i = 1; i < p.size(); ++i)
        if (g.adjacent(y, p[i]))
            throw PreconditionError("slide_along_path: pivot already adjacent to index " + id(int(i)));

    MoveScript s;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) s.push(Slide{y, p[i], p[i + 1]});
    return s;
}

MoveScript shuffle(const Graph& g, Vertex y, const Path& p, std::size_t from, std::size_t to) {
    require_path(g, p, "shuffle");
    if (!g.valid(y)) throw PreconditionError("shuffle: pivot out of range");
    if (from >= p.size() || to >= p.size()) throw PreconditionError("shuffle: index out of range");
    if (p.contains(y)) throw PreconditionError("shuffle: pivot lies on the path");
    if (!g.adjacent(y, p[from])) throw PreconditionError("shuffle: pivot not adjacent to source position");
    if (g.adjacent(y, p[to])) throw PreconditionError("shuffle: pivot already adjacent to target position");

    const int step = to > from ? 1 : -1;
    // occupied positions strictly between from and to, in walking order
    std::vector<std::size_t> chain{from};
    for (auto t = static_cast<long>(from) + step; t != static_cast<long>(to); t += step)
        if (g.adjacent(y, p[static_cast<std::size_t>(t)])) chain.push_back(static_cast<std::size_t>(t));

    MoveScript s;
    std::size_t target = to;
    for (auto k = chain.size(); k-- > 0;) {
        for (auto t = static_cast<long>(chain[k]); t != static_cast<long>(target); t += step)
            s.push(Slide{y, p[static_cast<std::size_t>(t)], p[static_cast<std::size_t>(t + step)]});
        target = chain[k];
    }
    return s;
}

TransferPaths find_transfer_paths(const Graph& g, Edge uv, Vertex x, Vertex y) {
    uv = Edge::of(uv.u, uv.v);
    if (!g.valid(x) || !g.valid(y) || x == y) throw PreconditionError("find_transfer_paths: bad target pair");
    if (!g.valid(uv.u) || !g.valid(uv.v) || !g.adjacent(uv.u, uv.v))
        throw PreconditionError("find_transfer_paths: " + to_string(uv) + " is not an edge");
    if (g.adjacent(x, y) && Edge::of(x, y) != uv)
        throw PreconditionError("find_transfer_paths: " + id(x) + " ~ " + id(y) + " already");
    if (!is_connected(g)) throw PreconditionError("find_transfer_paths: graph is disconnected");
    if (!is_connected(with_moved_edge(g, uv, x, y)))
        throw PreconditionError("find_transfer_paths: moving " + to_string(uv) + " disconnects the graph");

    auto to_u = shortest_path(g, x, uv.u, uv);
    auto to_v = shortest_path(g, x, uv.v, uv);
    const bool keep = to_u && (!to_v || to_u->size() <= to_v->size());
    TransferPaths out;
    out.swapped = !keep;
    out.u = keep ? uv.u : uv.v;
    out.v = keep ? uv.v : uv.u;
    out.x_path = keep ? *to_u : *to_v;
    auto from_y = shortest_path(g, y, out.v, uv);
    if (!from_y) throw InvariantViolation("find_transfer_paths: no path from " + id(y) + " to " + id(out.v));
    out.y_path = *from_y;
    return out;
}

MoveScript move_edge(const Graph& g, Edge uv, Vertex x, Vertex y) {
    uv = Edge::of(uv.u, uv.v);
    if (!g.valid(x) || !g.valid(y) || x == y) throw PreconditionError("move_edge: bad target pair");
    if (!g.valid(uv.u) || !g.valid(uv.v) || !g.adjacent(uv.u, uv.v))
        throw PreconditionError("move_edge: " + to_string(uv) + " is not an edge");
    if (g.adjacent(x, y)) throw PreconditionError("move_edge: " + id(x) + " ~ " + id(y) + " already");
    if (!is_connected(g)) throw PreconditionError("move_edge: graph is disconnected");
    const Graph expected = with_moved_edge(g, uv, x, y);
    if (!is_connected(expected))
        throw PreconditionError("move_edge: moving " + to_string(uv) + " to " + to_string(Edge::of(x, y)) +
                                " disconnects the graph");

    if (!uv.contains(x) && uv.contains(y)) std::swap(x, y);
    const TransferPaths tp = find_transfer_paths(g, uv, x, y);

    ScriptRecorder rec(g);
    if (x == tp.u) {
        rec.extend(move_shared_endpoint(g, x, tp.v, y, tp.y_path));
    } else if (g.adjacent(x, tp.v)) {
        // x sees both endpoints: hand x's own edge to y, then refill it from uv
        rec.extend(move_edge(rec.graph(), Edge::of(x, tp.v), x, y));
        rec.extend(move_edge(rec.graph(), uv, x, tp.v));
    } else {
        // g - uv + xv stays connected: x reaches u without uv
        rec.extend(move_edge(rec.graph(), uv, x, tp.v));
        rec.extend(move_edge(rec.graph(), Edge::of(x, tp.v), x, y));
    }
    if (!(rec.graph() == expected))
        throw InvariantViolation("move_edge: script does not realize " + to_string(uv) + " -> " +
                                 to_string(Edge::of(x, y)));
    return std::move(rec).take_script();
}

MoveScript interchange(const Graph& g, Vertex a, Vertex b) {
    if (!g.valid(a) || !g.valid(b) || a == b) throw PreconditionError("interchange: need two distinct vertices");
    if (!is_connected(g)) throw PreconditionError("interchange: graph is disconnected");

    ScriptRecorder rec(g);
    if (g.adjacent(a, b)) {
        for (Vertex z = 0; z < g.order(); ++z) {
            if (z == a || z == b) continue;
            const bool za = g.adjacent(z, a), zb = g.adjacent(z, b);
            if (za && !zb) rec.push(Slide{z, a, b});
            if (zb && !za) rec.push(Slide{z, b, a});
        }
    } else {
        const Path sigma = *shortest_path(g, a, b);
        const std::size_t last = sigma.size() - 1;
        for (Vertex z = 0; z < g.order(); ++z) {
            if (sigma.contains(z)) continue;
            const bool za = g.adjacent(z, a), zb = g.adjacent(z, b);
            if (za && !zb) rec.extend(shuffle(rec.graph(), z, sigma, 0, last));
            if (zb && !za) rec.extend(shuffle(rec.graph(), z, sigma, last, 0));
        }
        // Only sigma[1] ~ a and sigma[last-1] ~ b remain; they coincide when last == 2.
        if (last >= 3) {
            const Vertex near_b = sigma[last - 1];
            rec.extend(slide_along_path(rec.graph(), a, slice(sigma, 1, last)));
            rec.push(Slide{near_b, b, a});
            Path back{{a}};
            for (Vertex w : slice(sigma, last - 1, 1).vertices) back.vertices.push_back(w);
            rec.extend(slide_along_path(rec.graph(), b, back));
        }
    }

    Graph expected = g;
    for (Vertex z = 0; z < g.order(); ++z) {
        if (z == a || z == b) continue;
        const bool za = g.adjacent(z, a), zb = g.adjacent(z, b);
        if (za != zb) {
            expected.remove_edge(z, za ? a : b);
            expected.add_edge(z, za ? b : a);
        }
    }
    if (!(rec.graph() == expected))
        throw InvariantViolation("interchange: script does not swap " + id(a) + " and " + id(b));
    return std::move(rec).take_script();
}

}  // namespace edgeslide
