#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "edgeres/evenconn.hpp"
#include "edgeres/monomial.hpp"
#include "test_util.hpp"

using namespace edgeres;
using namespace edgeres::testutil;

TEST_CASE("path with the middle edge: the endpoints become even-connected") {
    SimpleGraph p = path_graph(4);
    EdgeMultiset e{{2, 3}};
    CHECK(is_even_connected(p, 1, 4, e));
    CHECK_FALSE(is_even_connected(p, 1, 1, e));
    SimpleGraph h = even_connection_graph(p, e);
    SimpleGraph expect = path_graph(4);
    expect.add_edge(1, 4);
    CHECK(h == expect);
}

TEST_CASE("triangle with one edge: the opposite vertex is even-connected to itself") {
    SimpleGraph tri = complete_graph(3);
    EdgeMultiset e{{2, 3}};
    CHECK(is_even_connected(tri, 1, 1, e));
    CHECK_FALSE(is_even_connected(tri, 2, 2, e));
    CHECK_FALSE(is_even_connected(tri, 3, 3, e));
    // frozen from the colon-ideal oracle: (I^2 : x2x3) = (x1^2, x1x2, x1x3, x2x3),
    // whose polarization is the triangle with a single whisker at vertex 1
    SimpleGraph h = even_connection_graph(tri, e);
    SimpleGraph expect = complete_graph(3);
    // whisker vertex 4
    SimpleGraph expect4(4);
    for (auto [u, v] : expect.edges()) expect4.add_edge(u, v);
    expect4.add_edge(1, 4);
    CHECK(h == expect4);
}

TEST_CASE("no walk across a gap") {
    SimpleGraph gap = SimpleGraph::from_edges(4, {{1, 2}, {3, 4}});
    CHECK_FALSE(is_even_connected(gap, 3, 4, {{1, 2}}));
    CHECK(even_connection_graph(gap, {{1, 2}}) == gap);
}

TEST_CASE("single edge: the colon adds nothing") {
    SimpleGraph g = SimpleGraph::from_edges(2, {{1, 2}});
    CHECK(even_connection_graph(g, {{1, 2}}) == g);
    CHECK(verify_even_connection_lemma(g, {{1, 2}}));
}

TEST_CASE("even-connection is symmetric") {
    std::mt19937 rng(67);
    for (int k = 0; k < 30; ++k) {
        SimpleGraph g = random_graph(rng, 6, 0.5);
        auto edges = g.edges();
        if (edges.empty()) continue;
        EdgeMultiset e{edges[rng() % edges.size()]};
        if (rng() % 2 && edges.size() > 1) e.push_back(edges[rng() % edges.size()]);
        for (int u = 1; u <= 6; ++u)
            for (int v = u + 1; v <= 6; ++v)
                CHECK(is_even_connected(g, u, v, e) == is_even_connected(g, v, u, e));
    }
}

TEST_CASE("growing the multiset never disconnects an even-connected pair") {
    std::mt19937 rng(71);
    for (int k = 0; k < 30; ++k) {
        SimpleGraph g = random_graph(rng, 6, 0.5);
        auto edges = g.edges();
        if (edges.empty()) continue;
        EdgeMultiset e{edges[rng() % edges.size()]};
        EdgeMultiset bigger = e;
        bigger.push_back(edges[rng() % edges.size()]);
        for (int u = 1; u <= 6; ++u) {
            VertexSet small = even_connected_targets(g, u, e);
            VertexSet large = even_connected_targets(g, u, bigger);
            CHECK(small.subset_of(large));
        }
    }
}

TEST_CASE("colon description holds for every single edge of every graph up to n=4") {
    for (int n = 2; n <= 4; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
            SimpleGraph g(n);
            int b = 0;
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v, ++b)
                    if ((mask >> b) & 1ull) g.add_edge(u, v);
            for (auto e : g.edges()) CHECK(verify_even_connection_lemma(g, {e}));
        }
    }
}

TEST_CASE("colon description on random two-edge multisets at n=5") {
    std::mt19937 rng(73);
    int done = 0;
    while (done < 15) {
        SimpleGraph g = random_graph(rng, 5, 0.6);
        auto edges = g.edges();
        if (edges.size() < 2) continue;
        ++done;
        EdgeMultiset e{edges[rng() % edges.size()], edges[rng() % edges.size()]};
        CHECK(verify_even_connection_lemma(g, e));
    }
}

TEST_CASE("multiset edges must be edges of the graph") {
    SimpleGraph p = path_graph(3);
    CHECK_THROWS_AS(is_even_connected(p, 1, 3, {{1, 3}}), std::invalid_argument);
}
