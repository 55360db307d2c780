#include "edgeslide/oracle.hpp"

#include <algorithm>
#include <deque>
#include <iomanip>
#include <map>
#include <sstream>

#include "edgeslide/moves.hpp"

namespace edgeslide::oracle {

namespace {

using Key = std::vector<Edge>;

bool key_less(const Graph& a, const Graph& b) { return a.edges() < b.edges(); }

}  // namespace

std::vector<Graph> enumerate_connected(int n, int e) {
    if (n < 1) throw PreconditionError("enumerate_connected: need at least one vertex");
    if (n > kEnumerationCap)
        throw PreconditionError("enumerate_connected: n=" + std::to_string(n) + " exceeds cap " +
                                std::to_string(kEnumerationCap));
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const int m = static_cast<int>(pairs.size());
    std::vector<Graph> out;
    if (e < 0 || e > m) return out;

    std::vector<int> pick(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
        Graph g(n);
        for (int i : pick) g.add_edge(pairs[static_cast<std::size_t>(i)].u, pairs[static_cast<std::size_t>(i)].v);
        if (is_connected(g)) out.push_back(std::move(g));
        // next combination in lexicographic order
        int i = e - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - e + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < e; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<Graph> slide_neighbors(const Graph& g) {
    std::vector<Graph> out;
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y : g.neighbors(x))
            for (Vertex z : g.neighbors(y))
                if (z != x && !g.adjacent(x, z)) out.push_back(apply_move(g, Slide{x, y, z}));
    std::sort(out.begin(), out.end(), key_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Census reachability_census(int n, int e) {
    if (n > kCensusCap)
        throw PreconditionError("reachability_census: n=" + std::to_string(n) + " exceeds cap " +
                                std::to_string(kCensusCap));
    const std::vector<Graph> members = enumerate_connected(n, e);
    std::map<Key, std::size_t> index;
    for (std::size_t i = 0; i < members.size(); ++i) index.emplace(members[i].edges(), i);

    std::vector<std::vector<std::size_t>> step(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (const Graph& h : slide_neighbors(members[i])) step[i].push_back(index.at(h.edges()));

    Census c{n, e, members.size(), 0, 0};
    std::vector<int> klass(members.size(), -1);
    for (std::size_t s = 0; s < members.size(); ++s) {
        std::vector<int> dist(members.size(), -1);
        dist[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            c.diameter = std::max(c.diameter, dist[i]);
            for (std::size_t j : step[i])
                if (dist[j] < 0) {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
        }
        if (klass[s] < 0) {
            for (std::size_t i = 0; i < members.size(); ++i)
                if (dist[i] >= 0) klass[i] = static_cast<int>(c.classes);
            ++c.classes;
        }
    }
    return c;
}

int slide_distance(const Graph& a, const Graph& b) {
    if (a.order() > kCensusCap) throw PreconditionError("slide_distance: n exceeds cap");
    if (a.order() != b.order() || a.size() != b.size()) return -1;
    const Key goal = b.edges();
    std::map<Key, int> dist{{a.edges(), 0}};
    std::deque<Graph> queue{a};
    while (!queue.empty()) {
        Graph g = std::move(queue.front());
        queue.pop_front();
        const int d = dist.at(g.edges());
        if (g.edges() == goal) return d;
        for (Graph& h : slide_neighbors(g))
            if (dist.emplace(h.edges(), d + 1).second) queue.push_back(std::move(h));
    }
    return -1;
}

std::string format_census(const std::vector<Census>& rows) {
    std::ostringstream out;
    out << std::setw(3) << "n" << std::setw(4) << "e" << std::setw(9) << "members" << std::setw(9) << "classes"
        << std::setw(10) << "diameter" << '\n';
    for (const Census& c : rows)
        out << std::setw(3) << c.n << std::setw(4) << c.e << std::setw(9) << c.members << std::setw(9) << c.classes
            << std::setw(10) << c.diameter << '\n';
    return out.str();
}

}  // namespace edgeslide::oracle
