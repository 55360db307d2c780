#include <doctest.h>

#include <random>

#include "edgeslide/euler_ops.hpp"
#include "support.hpp"

using namespace edgeslide;
using testing::edges_of;
using testing::make;

namespace {

// Random connected graph on n vertices with Euler characteristic chi, if one exists.
std::optional<Graph> with_chi(int n, int chi, std::mt19937& rng) {
    const int e = n - chi;
    if (e < n - 1 || e > n * (n - 1) / 2) return std::nullopt;
    return testing::random_connected(n, e, rng);
}

void check_prefixes(const Graph& g, const MoveScript& s) {
    const int chi = euler_characteristic(g);
    replay(g, s, CheckLevel::full, [&](std::size_t, const Graph& h) {
        CHECK(euler_characteristic(h) == chi);
        CHECK(testing::brute_connected(h));
        CHECK(h.size() >= h.order() - 1);
        CHECK(h.size() <= h.order() * (h.order() - 1) / 2);
        CHECK(2 * chi >= h.order() * (3 - h.order()));
        CHECK(chi <= 1);
    });
}

}  // namespace

TEST_CASE("expand_to_order") {
    Graph c3 = testing::complete(3);
    CHECK(expand_to_order(c3, 3).empty());

    Graph k1(1);
    MoveScript s = expand_to_order(k1, 3);
    CHECK(s == MoveScript{{AddPendant{0, 1}, AddPendant{0, 2}}});
    Graph p = apply_script(k1, s);
    CHECK(p.size() == 2);
    CHECK(testing::sorted_degrees(p) == std::vector<int>{2, 1, 1});
    CHECK(euler_characteristic(p) == 1);

    Graph big = replay(c3, expand_to_order(c3, 6), CheckLevel::full);
    CHECK(big.order() == 6);
    CHECK(big.size() == 6);
    CHECK(euler_characteristic(big) == 0);

    CHECK_THROWS_AS(expand_to_order(c3, 2), PreconditionError);
}

TEST_CASE("pendant_subdivide_equivalence") {
    auto [a, b] = pendant_subdivide_equivalence(testing::path_graph(2), 0, 1);
    CHECK(a == MoveScript{{Subdivide{1, 0, 2}}});
    CHECK(b == MoveScript{{AddPendant{1, 2}, Slide{0, 1, 2}}});
    CHECK(apply_script(testing::path_graph(2), a).edges() == edges_of({{0, 2}, {1, 2}}));
    CHECK(apply_script(testing::path_graph(2), b).edges() == edges_of({{0, 2}, {1, 2}}));

    Graph c3 = testing::complete(3);
    auto [sa, sb] = pendant_subdivide_equivalence(c3, 0, 1);
    Graph ha = apply_script(c3, sa);
    CHECK(ha == apply_script(c3, sb));
    CHECK(ha.edges() == edges_of({{0, 2}, {1, 2}, {0, 3}, {1, 3}}));  // the 4-cycle 0-2-1-3

    CHECK_THROWS_AS(pendant_subdivide_equivalence(testing::path_graph(3), 0, 2), PreconditionError);
}

TEST_CASE("collapse_to_order") {
    Graph c5 = testing::cycle(5);
    CHECK(collapse_to_order(c5, 5).empty());

    Graph p3 = testing::path_graph(3);
    MoveScript s = collapse_to_order(p3, 2);
    CHECK(s == MoveScript{{RemoveLeaf{0, 1}}});
    check_prefixes(p3, s);

    Graph c6 = testing::cycle(6);
    MoveScript t = collapse_to_order(c6, 3);
    check_prefixes(c6, t);
    CHECK(apply_script(c6, t) == testing::complete(3));

    // K4 has chi = -2; no simple graph on 3 vertices has 5 edges
    CHECK_THROWS_AS(collapse_to_order(testing::complete(4), 3), PreconditionError);
}

TEST_CASE("transform_euler examples") {
    Graph c3 = testing::complete(3);
    EulerPlan same = transform_euler(c3, c3);
    CHECK(same.map == VertexBijection::identity(3));
    CHECK(is_isomorphic_under(apply_script(c3, same.script), c3, same.map));

    Graph c6 = testing::cycle(6);
    EulerPlan up = transform_euler(c3, c6);
    check_prefixes(c3, up.script);
    CHECK(is_isomorphic_under(apply_script(c3, up.script), c6, up.map));

    EulerPlan down = transform_euler(c6, c3);
    check_prefixes(c6, down.script);
    CHECK(is_isomorphic_under(apply_script(c6, down.script), c3, down.map));

    std::mt19937 rng(71);
    Graph small_tree = testing::random_connected(4, 3, rng);
    Graph large_tree = testing::random_connected(9, 8, rng);
    EulerPlan grow = transform_euler(small_tree, large_tree);
    check_prefixes(small_tree, grow.script);
    CHECK(is_isomorphic_under(apply_script(small_tree, grow.script), large_tree, grow.map));

    CHECK_THROWS_AS(transform_euler(c3, testing::path_graph(4)), PreconditionError);
}

TEST_CASE("transform_euler on random pairs of equal chi") {
    std::mt19937 rng(73);
    int done = 0;
    while (done < 40) {
        const int n1 = 3 + static_cast<int>(rng() % 7);
        const int n2 = 3 + static_cast<int>(rng() % 7);
        const int chi = 1 - static_cast<int>(rng() % 4);
        auto g = with_chi(n1, chi, rng);
        auto h = with_chi(n2, chi, rng);
        if (!g || !h) continue;
        ++done;
        EulerPlan plan = transform_euler(*g, *h);
        check_prefixes(*g, plan.script);
        CHECK(is_isomorphic_under(apply_script(*g, plan.script), *h, plan.map));
    }
}
