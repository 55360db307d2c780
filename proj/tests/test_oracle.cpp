#include <doctest.h>

#include <map>

#include "edgeslide/oracle.hpp"
#include "support.hpp"

using namespace edgeslide;
using testing::edges_of;

namespace {

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Connected labeled graphs on n vertices with e edges, by inclusion-exclusion
// over the component containing vertex 0.
long long connected_count(int n, int e) {
    static std::map<std::pair<int, int>, long long> memo;
    if (n == 1) return e == 0 ? 1 : 0;
    if (auto it = memo.find({n, e}); it != memo.end()) return it->second;
    long long total = binomial(n * (n - 1) / 2, e);
    for (int k = 1; k < n; ++k)
        for (int f = 0; f <= e; ++f) {
            const int rest = (n - k) * (n - k - 1) / 2;
            if (e - f > rest) continue;
            total -= binomial(n - 1, k - 1) * connected_count(k, f) * binomial(rest, e - f);
        }
    return memo[{n, e}] = total;
}

}  // namespace

TEST_CASE("enumerate_connected") {
    auto k3 = oracle::enumerate_connected(3, 3);
    REQUIRE(k3.size() == 1);
    CHECK(k3.front() == testing::complete(3));

    auto trees = oracle::enumerate_connected(4, 3);
    CHECK(trees.size() == 16);  // Cayley: 4^2

    auto k4 = oracle::enumerate_connected(4, 6);
    REQUIRE(k4.size() == 1);
    CHECK(k4.front() == testing::complete(4));

    CHECK(oracle::enumerate_connected(4, 2).empty());
    CHECK_THROWS_AS(oracle::enumerate_connected(8, 7), PreconditionError);
}

TEST_CASE("enumerate_connected counts, order and membership") {
    for (int n = 1; n <= 6; ++n)
        for (int e = 0; e <= n * (n - 1) / 2; ++e) {
            auto all = oracle::enumerate_connected(n, e);
            CHECK(static_cast<long long>(all.size()) == connected_count(n, e));
            for (std::size_t i = 0; i < all.size(); ++i) {
                CHECK(all[i].order() == n);
                CHECK(all[i].size() == e);
                CHECK(testing::brute_connected(all[i]));
                if (i > 0) CHECK(all[i - 1].edges() < all[i].edges());
            }
        }
}

TEST_CASE("slide_neighbors") {
    CHECK(oracle::slide_neighbors(testing::complete(5)).empty());
    CHECK(oracle::slide_neighbors(Graph(1)).empty());

    auto p3 = oracle::slide_neighbors(testing::path_graph(3));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0].edges() == edges_of({{0, 1}, {0, 2}}));
    CHECK(p3[1].edges() == edges_of({{0, 2}, {1, 2}}));
}

TEST_CASE("slide_neighbors is symmetric") {
    for (int e = 4; e <= 7; ++e)
        for (const Graph& g : oracle::enumerate_connected(5, e))
            for (const Graph& h : oracle::slide_neighbors(g)) {
                auto back = oracle::slide_neighbors(h);
                CHECK(std::find(back.begin(), back.end(), g) != back.end());
            }
}

TEST_CASE("reachability_census") {
    auto trees = oracle::reachability_census(4, 3);
    CHECK(trees.members == 16);
    CHECK(trees.classes == 1);

    auto k4 = oracle::reachability_census(4, 6);
    CHECK(k4.members == 1);
    CHECK(k4.classes == 1);
    CHECK(k4.diameter == 0);

    auto five = oracle::reachability_census(5, 4);
    CHECK(five.members == 125);
    CHECK(five.classes == 1);

    CHECK_THROWS_AS(oracle::reachability_census(6, 5), PreconditionError);
}

TEST_CASE("every (n, e) with n <= 5 is a single slide class") {
    for (int n = 1; n <= 5; ++n)
        for (int e = n - 1; e <= n * (n - 1) / 2; ++e) CHECK(oracle::reachability_census(n, e).classes == 1);
}

TEST_CASE("slide_distance") {
    Graph p3 = testing::path_graph(3);
    CHECK(oracle::slide_distance(p3, p3) == 0);
    CHECK(oracle::slide_distance(p3, testing::make(3, {{0, 2}, {1, 2}})) == 1);
    CHECK(oracle::slide_distance(p3, testing::complete(3)) == -1);
}

TEST_CASE("format_census") {
    std::vector<oracle::Census> rows{oracle::reachability_census(3, 2), oracle::reachability_census(3, 3)};
    CHECK(oracle::format_census(rows) ==
          "  n   e  members  classes  diameter\n"
          "  3   2        3        1         1\n"
          "  3   3        1        1         0\n");
}
