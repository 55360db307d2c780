#include "edgeslide/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "text.hpp"

namespace edgeslide {

Graph::Graph(int n) {
    if (n < 0) throw PreconditionError("vertex count must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

std::size_t Graph::check(Vertex v) const {
    if (!valid(v))
        throw PreconditionError("vertex " + std::to_string(v) + " out of range for n=" +
                                std::to_string(order()));
    return static_cast<std::size_t>(v);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    const auto& na = adj_[check(a)];
    check(b);
    return std::binary_search(na.begin(), na.end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
            if (v > u) out.push_back({u, v});
    return out;
}

void Graph::add_edge(Vertex a, Vertex b) {
    auto& na = adj_[check(a)];
    auto& nb = adj_[check(b)];
    if (a == b) throw PreconditionError("loop at vertex " + std::to_string(a));
    auto ia = std::lower_bound(na.begin(), na.end(), b);
    if (ia != na.end() && *ia == b) throw PreconditionError("duplicate edge " + to_string(Edge::of(a, b)));
    na.insert(ia, b);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    ++edge_count_;
}

void Graph::remove_edge(Vertex a, Vertex b) {
    auto& na = adj_[check(a)];
    auto& nb = adj_[check(b)];
    auto ia = std::lower_bound(na.begin(), na.end(), b);
    if (ia == na.end() || *ia != b) throw PreconditionError("missing edge " + to_string(Edge::of(a, b)));
    na.erase(ia);
    nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
    --edge_count_;
}

Vertex Graph::add_vertex() {
    adj_.emplace_back();
    return order() - 1;
}

void Graph::remove_vertex(Vertex v) {
    const std::size_t idx = check(v);
    edge_count_ -= static_cast<int>(adj_[idx].size());
    adj_.erase(adj_.begin() + static_cast<std::ptrdiff_t>(idx));
    for (auto& list : adj_) {
        std::erase(list, v);
        for (Vertex& w : list)
            if (w > v) --w;
    }
}

void Graph::check_invariants() const {
    int half_edges = 0;
    for (Vertex u = 0; u < order(); ++u) {
        const auto& nu = adj_[static_cast<std::size_t>(u)];
        if (!std::is_sorted(nu.begin(), nu.end()) ||
            std::adjacent_find(nu.begin(), nu.end()) != nu.end())
            throw InvariantViolation("neighbor list of " + std::to_string(u) + " not strictly sorted");
        for (Vertex w : nu) {
            if (!valid(w) || w == u)
                throw InvariantViolation("bad neighbor " + std::to_string(w) + " of " + std::to_string(u));
            const auto& nw = adj_[static_cast<std::size_t>(w)];
            if (!std::binary_search(nw.begin(), nw.end(), u))
                throw InvariantViolation("asymmetric adjacency " + to_string(Edge::of(u, w)));
        }
        half_edges += static_cast<int>(nu.size());
    }
    if (half_edges != 2 * edge_count_) throw InvariantViolation("edge count out of sync");
}

bool Path::contains(Vertex v) const { return index_of(v) >= 0; }

int Path::index_of(Vertex v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

Path Path::reversed() const { return Path{{vertices.rbegin(), vertices.rend()}}; }

int ComponentPartition::group_of(Vertex v) const {
    for (std::size_t i = 0; i < groups.size(); ++i)
        if (std::binary_search(groups[i].begin(), groups[i].end(), v)) return static_cast<int>(i);
    return -1;
}

VertexBijection::VertexBijection(std::vector<Vertex> forward) : forward_(std::move(forward)) {
    std::vector<bool> seen(forward_.size(), false);
    for (Vertex v : forward_) {
        if (v < 0 || static_cast<std::size_t>(v) >= forward_.size() || seen[static_cast<std::size_t>(v)])
            throw PreconditionError("bijection is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

VertexBijection VertexBijection::identity(int n) {
    std::vector<Vertex> f(static_cast<std::size_t>(n));
    std::iota(f.begin(), f.end(), 0);
    return VertexBijection(std::move(f));
}

VertexBijection VertexBijection::inverse() const {
    std::vector<Vertex> inv(forward_.size());
    for (std::size_t i = 0; i < forward_.size(); ++i)
        inv[static_cast<std::size_t>(forward_[i])] = static_cast<Vertex>(i);
    return VertexBijection(std::move(inv));
}

namespace {

// BFS parents from `root`, skipping `excluded` and the `forbidden` edge.
std::vector<Vertex> bfs_parents(const Graph& g, Vertex root, std::optional<Edge> forbidden,
                                std::optional<Vertex> excluded = std::nullopt) {
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
    parent[static_cast<std::size_t>(root)] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (parent[static_cast<std::size_t>(w)] != -1 || (excluded && w == *excluded)) continue;
            if (forbidden && Edge::of(u, w) == *forbidden) continue;
            parent[static_cast<std::size_t>(w)] = u;
            queue.push_back(w);
        }
    }
    return parent;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto parent = bfs_parents(g, 0, std::nullopt);
    return std::none_of(parent.begin(), parent.end(), [](Vertex p) { return p == -1; });
}

std::optional<Path> shortest_path(const Graph& g, Vertex a, Vertex b, std::optional<Edge> forbidden) {
    if (!g.valid(a) || !g.valid(b)) throw PreconditionError("shortest_path: endpoint out of range");
    auto parent = bfs_parents(g, a, forbidden);
    if (parent[static_cast<std::size_t>(b)] == -1) return std::nullopt;
    Path p;
    for (Vertex v = b; v != a; v = parent[static_cast<std::size_t>(v)]) p.vertices.push_back(v);
    p.vertices.push_back(a);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

ComponentPartition connected_components(const Graph& g, std::optional<Vertex> excluded) {
    ComponentPartition out;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    if (excluded && g.valid(*excluded)) seen[static_cast<std::size_t>(*excluded)] = true;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        auto parent = bfs_parents(g, s, std::nullopt, excluded);
        std::vector<Vertex> group;
        for (Vertex v = 0; v < g.order(); ++v)
            if (parent[static_cast<std::size_t>(v)] != -1) {
                group.push_back(v);
                seen[static_cast<std::size_t>(v)] = true;
            }
        out.groups.push_back(std::move(group));
    }
    return out;
}

std::vector<Edge> spanning_tree(const Graph& g, Vertex root) {
    if (!g.valid(root)) throw PreconditionError("spanning_tree: root out of range");
    auto parent = bfs_parents(g, root, std::nullopt);
    std::vector<Edge> tree;
    for (Vertex v = 0; v < g.order(); ++v) {
        Vertex p = parent[static_cast<std::size_t>(v)];
        if (p == -1) throw PreconditionError("spanning_tree: graph is disconnected");
        if (v != root) tree.push_back(Edge::of(p, v));
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

std::int64_t energy(const Graph& g) {
    std::int64_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) sum += std::int64_t{g.degree(v)} * g.degree(v);
    return sum;
}

GraphStats stats(const Graph& g) {
    GraphStats s;
    s.n = g.order();
    s.e = g.size();
    for (Vertex v = 0; v < g.order(); ++v) {
        s.degrees.push_back(g.degree(v));
        s.curvature_sum += 2 - g.degree(v);
    }
    s.energy = energy(g);
    s.euler_characteristic = euler_characteristic(g);
    return s;
}

bool is_isomorphic_under(const Graph& g, const Graph& h, const VertexBijection& psi) {
    if (g.order() != h.order() || psi.size() != g.order())
        throw PreconditionError("is_isomorphic_under: size mismatch");
    if (g.size() != h.size()) return false;
    for (const Edge& e : g.edges())
        if (!h.adjacent(psi(e.u), psi(e.v))) return false;
    return true;
}

Graph without_vertex(const Graph& g, Vertex v) {
    Graph out = g;
    out.remove_vertex(v);
    return out;
}

Graph parse_graph(std::string_view text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header 'p <n> <e>'");
    const auto& header = lines.front();
    if (header.tokens.size() != 3 || header.tokens[0] != "p")
        throw ParseError(header.number, "malformed header, expected 'p <n> <e>'");
    const int n = detail::parse_int(header.tokens[1], header.number);
    const int e = detail::parse_int(header.tokens[2], header.number);
    if (n < 0 || e < 0) throw ParseError(header.number, "negative count in header");
    if (static_cast<int>(lines.size()) - 1 != e)
        throw ParseError(header.number, "header declares " + std::to_string(e) + " edges, found " +
                                            std::to_string(lines.size() - 1));

    Graph g(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.size() != 3 || line.tokens[0] != "e")
            throw ParseError(line.number, "expected 'e <u> <v>'");
        const int u = detail::parse_int(line.tokens[1], line.number);
        const int v = detail::parse_int(line.tokens[2], line.number);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(line.number, "vertex id out of range for n=" + std::to_string(n));
        if (u == v) throw ParseError(line.number, "loop at vertex " + std::to_string(u));
        if (g.adjacent(u, v)) throw ParseError(line.number, "duplicate edge " + to_string(Edge::of(u, v)));
        g.add_edge(u, v);
    }
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

VertexBijection parse_bijection(std::string_view text, int n) {
    std::vector<Vertex> forward(static_cast<std::size_t>(n), -1);
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (const auto& line : detail::content_lines(text)) {
        if (line.tokens.size() != 3 || line.tokens[0] != "m")
            throw ParseError(line.number, "expected 'm <src> <dst>'");
        const int src = detail::parse_int(line.tokens[1], line.number);
        const int dst = detail::parse_int(line.tokens[2], line.number);
        if (src < 0 || src >= n || dst < 0 || dst >= n)
            throw ParseError(line.number, "vertex id out of range for n=" + std::to_string(n));
        if (forward[static_cast<std::size_t>(src)] != -1)
            throw ParseError(line.number, "source " + std::to_string(src) + " mapped twice");
        if (hit[static_cast<std::size_t>(dst)])
            throw ParseError(line.number, "target " + std::to_string(dst) + " hit twice");
        forward[static_cast<std::size_t>(src)] = dst;
        hit[static_cast<std::size_t>(dst)] = true;
    }
    for (int v = 0; v < n; ++v)
        if (forward[static_cast<std::size_t>(v)] == -1)
            throw ParseError(0, "vertex " + std::to_string(v) + " has no image");
    return VertexBijection(std::move(forward));
}

std::string serialize_bijection(const VertexBijection& psi) {
    std::ostringstream out;
    for (Vertex v = 0; v < psi.size(); ++v) out << "m " << v << ' ' << psi(v) << '\n';
    return out.str();
}

std::string to_string(const Edge& e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

std::string to_string(const GraphStats& s) {
    std::ostringstream out;
    out << "n=" << s.n << " e=" << s.e << " chi=" << s.euler_characteristic << " energy=" << s.energy
        << " degrees=";
    for (std::size_t i = 0; i < s.degrees.size(); ++i) out << (i ? "," : "") << s.degrees[i];
    out << " curvature_sum=" << s.curvature_sum;
    return out.str();
}

}  // namespace edgeslide
