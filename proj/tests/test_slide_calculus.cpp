#include <doctest.h>

#include <random>

#include "edgeslide/oracle.hpp"
#include "edgeslide/slide_calculus.hpp"
#include "support.hpp"

using namespace edgeslide;
using testing::edges_of;
using testing::make;

namespace {

int random_edge_count(int n, std::mt19937& rng) {
    const int max_e = n * (n - 1) / 2;
    return n - 1 + static_cast<int>(rng() % static_cast<unsigned>(max_e - n + 2));
}

}  // namespace

TEST_CASE("slide_along_path") {
    // 0-1-2 with 3 hanging off 0
    Graph g = make(4, {{0, 1}, {1, 2}, {0, 3}});
    CHECK(slide_along_path(g, 3, Path{{0, 1, 2}}) == MoveScript{{Slide{3, 0, 1}, Slide{3, 1, 2}}});
    CHECK(slide_along_path(g, 3, Path{{0}}).empty());
    g.add_edge(3, 1);
    CHECK_THROWS_AS(slide_along_path(g, 3, Path{{0, 1, 2}}), PreconditionError);
    CHECK_THROWS_AS(slide_along_path(g, 0, Path{{0, 1, 2}}), PreconditionError);
}

TEST_CASE("shuffle cascades from the token nearest the target") {
    Graph g = make(4, {{0, 1}, {1, 2}, {3, 0}});
    CHECK(shuffle(g, 3, Path{{0, 1, 2}}, 0, 2) == slide_along_path(g, 3, Path{{0, 1, 2}}));

    g.add_edge(3, 1);
    MoveScript s = shuffle(g, 3, Path{{0, 1, 2}}, 0, 2);
    CHECK(s == MoveScript{{Slide{3, 1, 2}, Slide{3, 0, 1}}});
    Graph h = apply_script(g, s);
    CHECK(h.adjacent(3, 1));
    CHECK(h.adjacent(3, 2));
    CHECK_FALSE(h.adjacent(3, 0));

    CHECK_THROWS_AS(shuffle(g, 3, Path{{0, 1, 2}}, 0, 0), PreconditionError);
    CHECK_THROWS_AS(shuffle(g, 3, Path{{0, 1, 2}}, 0, 1), PreconditionError);
}

TEST_CASE("shuffle moves one adjacency and leaves everything else in place") {
    std::mt19937 rng(23);
    int exercised = 0;
    for (int trial = 0; trial < 3000 && exercised < 400; ++trial) {
        const int n = 4 + trial % 5;
        Graph g = testing::random_connected(n, random_edge_count(n, rng), rng);
        const Vertex a = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        const Vertex b = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        const auto p = shortest_path(g, a, b);
        if (!p || p->size() < 2) continue;
        const Vertex y = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        if (p->contains(y)) continue;
        std::size_t from = rng() % p->size(), to = rng() % p->size();
        if (!g.adjacent(y, (*p)[from]) || g.adjacent(y, (*p)[to])) continue;
        ++exercised;

        const MoveScript s = shuffle(g, y, *p, from, to);
        CHECK(s.size() == (from > to ? from - to : to - from));
        Graph expected = g;
        expected.remove_edge(y, (*p)[from]);
        expected.add_edge(y, (*p)[to]);
        CHECK(apply_script(g, s) == expected);
    }
    CHECK(exercised >= 100);
}

TEST_CASE("find_transfer_paths") {
    auto tp = find_transfer_paths(testing::cycle(4), Edge{0, 1}, 0, 1);
    CHECK(tp.x_path.vertices == std::vector<Vertex>{0});
    CHECK(tp.y_path.vertices == std::vector<Vertex>{1});
    CHECK(tp.u == 0);
    CHECK(tp.v == 1);

    CHECK_THROWS_AS(find_transfer_paths(make(4, {{0, 1}, {2, 3}}), Edge{0, 1}, 1, 2), PreconditionError);

    Graph c5 = testing::cycle(5);
    tp = find_transfer_paths(c5, Edge{0, 1}, 2, 4);
    CHECK(tp.swapped);
    CHECK(tp.u == 1);
    CHECK(tp.v == 0);
    CHECK(tp.x_path.vertices == std::vector<Vertex>{2, 1});
    CHECK(tp.y_path.vertices == std::vector<Vertex>{4, 0});
    // every uv-avoiding path, enumerated independently: the unswapped pairing
    // needs 2 -> 0 which is longer than 2 -> 1
    auto to_0 = testing::all_simple_paths(c5, 2, 0, Edge{0, 1});
    auto to_1 = testing::all_simple_paths(c5, 2, 1, Edge{0, 1});
    REQUIRE(to_0.size() == 1);
    REQUIRE(to_1.size() == 1);
    CHECK(to_0.front().size() > to_1.front().size());
    CHECK(testing::all_simple_paths(c5, 4, 0, Edge{0, 1}).front() == tp.y_path.vertices);
}

TEST_CASE("move_edge examples") {
    CHECK(move_edge(testing::cycle(4), Edge{0, 1}, 0, 2) == MoveScript{{Slide{0, 1, 2}}});

    Graph c5 = testing::cycle(5);
    MoveScript s = move_edge(c5, Edge{0, 1}, 2, 4);
    Graph h = replay(c5, s, CheckLevel::full);
    CHECK(h.edges() == edges_of({{1, 2}, {2, 3}, {3, 4}, {0, 4}, {2, 4}}));
    const int distance = oracle::slide_distance(c5, h);
    CHECK(distance >= 1);
    CHECK(static_cast<int>(s.size()) >= distance);

    Graph k4 = testing::complete(4);
    for (Vertex x = 0; x < 4; ++x)
        for (Vertex y = 0; y < 4; ++y)
            if (x != y) CHECK_THROWS_AS(move_edge(k4, Edge{0, 1}, x, y), PreconditionError);
}

TEST_CASE("move_edge on random graphs changes exactly {uv, xy}") {
    std::mt19937 rng(29);
    int exercised = 0;
    for (int trial = 0; trial < 2000 && exercised < 500; ++trial) {
        const int n = 4 + trial % 5;
        Graph g = testing::random_connected(n, random_edge_count(n, rng), rng);
        const auto edges = g.edges();
        const Edge uv = edges[rng() % edges.size()];
        const Vertex x = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        const Vertex y = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        if (x == y || g.adjacent(x, y)) continue;
        Graph expected = g;
        expected.remove_edge(uv.u, uv.v);
        expected.add_edge(x, y);
        if (!testing::brute_connected(expected)) {
            CHECK_THROWS_AS(move_edge(g, uv, x, y), PreconditionError);
            continue;
        }
        ++exercised;
        Graph h = replay(g, move_edge(g, uv, x, y), CheckLevel::full);
        CHECK(testing::edge_diff(g, h) == edges_of({{uv.u, uv.v}, {x, y}}));
    }
    CHECK(exercised >= 200);
}

TEST_CASE("interchange examples") {
    Graph p3 = testing::path_graph(3);
    MoveScript s = interchange(p3, 0, 1);
    CHECK(s == MoveScript{{Slide{2, 1, 0}}});
    CHECK(apply_script(p3, s).edges() == edges_of({{0, 1}, {0, 2}}));

    Graph p4 = testing::path_graph(4);
    Graph h = replay(p4, interchange(p4, 0, 3), CheckLevel::full);
    CHECK(h.edges() == edges_of({{0, 2}, {1, 2}, {1, 3}}));
    CHECK(h == testing::swap_neighborhoods(p4, 0, 3));

    CHECK(interchange(testing::cycle(4), 0, 2).empty());
    CHECK_THROWS_AS(interchange(p3, 1, 1), PreconditionError);
    CHECK_THROWS_AS(interchange(make(3, {{0, 1}}), 0, 2), PreconditionError);
}

TEST_CASE("interchange matches the direct swap and is an involution") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + trial % 7;
        Graph g = testing::random_connected(n, random_edge_count(n, rng), rng);
        const Vertex a = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        Vertex b = static_cast<Vertex>(rng() % static_cast<unsigned>(n - 1));
        if (b >= a) ++b;
        Graph h = replay(g, interchange(g, a, b), CheckLevel::full);
        CHECK(h == testing::swap_neighborhoods(g, a, b));
        CHECK(apply_script(h, interchange(h, a, b)) == g);
    }
}
