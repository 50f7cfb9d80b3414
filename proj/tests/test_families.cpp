#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "edgeres/betti.hpp"
#include "edgeres/families.hpp"
#include "test_util.hpp"

using namespace edgeres;
using namespace edgeres::testutil;

namespace {

const std::vector<FamilyKind> kAllKinds = {FamilyKind::A1, FamilyKind::A2, FamilyKind::A3,
                                           FamilyKind::B,  FamilyKind::C,  FamilyKind::D1,
                                           FamilyKind::D2};

std::vector<FamilySpec> specs_up_to(int tmax) {
    std::vector<FamilySpec> out;
    for (int t = 1; t <= tmax; ++t)
        for (auto k : {FamilyKind::A1, FamilyKind::A2, FamilyKind::A3, FamilyKind::B})
            out.push_back({k, t});
    out.push_back({FamilyKind::C, 1});
    out.push_back({FamilyKind::D1, 1});
    out.push_back({FamilyKind::D2, 1});
    return out;
}

}  // namespace

TEST_CASE("A1 at t=1 is the 4-cycle with a pendant") {
    SimpleGraph g = build_family({FamilyKind::A1, 1});
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.degree(5) == 1);
    CHECK(g.has_edge(1, 5));
    CHECK(is_isomorphic(induced_subgraph(g, VertexSet::of({1, 2, 3, 4})).graph, cycle_graph(4)));
}

TEST_CASE("B restricted to the cycle vertices is the cycle") {
    SimpleGraph g = build_family({FamilyKind::B, 1});
    CHECK(g.vertex_count() == 6);
    auto sub = induced_subgraph(g, VertexSet::of({1, 2, 3, 4}));
    CHECK(is_isomorphic(sub.graph, cycle_graph(4)));
    // the cone vertex t+4 = 5 sees the whole cycle, the ear 6 sees 1 and 2
    for (int i = 1; i <= 4; ++i) CHECK(g.has_edge(i, 5));
    CHECK(g.degree(6) == 2);
    CHECK(g.has_edge(1, 6));
    CHECK(g.has_edge(2, 6));
}

TEST_CASE("C has exactly three minimal cycles, all of length 4") {
    SimpleGraph g = build_family({FamilyKind::C, 1});
    auto cycles = enumerate_induced_cycles(g, 4);
    CHECK(cycles.size() == 3);
    for (const auto& c : cycles) CHECK(c.length() == 4);
}

TEST_CASE("D1 is the 12-edge square dipyramid, i.e. the octahedron graph") {
    SimpleGraph d1 = build_family({FamilyKind::D1, 1});
    CHECK(d1.edge_count() == 12);
    SimpleGraph k222(6);  // complete tripartite with parts {1,4},{2,5},{3,6}
    for (int u = 1; u <= 6; ++u)
        for (int v = u + 1; v <= 6; ++v)
            if (v - u != 3) k222.add_edge(u, v);
    CHECK(is_isomorphic(d1, k222));
    CHECK(enumerate_induced_cycles(d1, 4).size() == 3);
}

TEST_CASE("D2 shape") {
    SimpleGraph d2 = build_family({FamilyKind::D2, 1});
    CHECK(d2.edge_count() == 11);
    CHECK(d2.has_edge(5, 6));
    auto cycles = enumerate_induced_cycles(d2, 4);
    CHECK(cycles.size() == 3);
    CHECK_FALSE(is_isomorphic(d2, build_family({FamilyKind::D1, 1})));
}

TEST_CASE("A3 minimal cycles are the two stated ones") {
    SimpleGraph g = build_family({FamilyKind::A3, 2});
    auto cycles = enumerate_induced_cycles(g, 4);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0] == canonical_cycle({1, 2, 3, 4, 5}));
    CHECK(cycles[1] == canonical_cycle({1, 6, 3, 4, 5}));
}

TEST_CASE("cricket inside the complement of A3 for t >= 3") {
    SimpleGraph g = complement(build_family({FamilyKind::A3, 3}));
    auto sub = induced_subgraph(g, VertexSet::of({1, 2, 3, 5, 7})).graph;  // t+4 = 7
    SimpleGraph cricket = SimpleGraph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}});
    CHECK(is_isomorphic(sub, cricket));
    CHECK(detect_pattern(g, Pattern::cricket));
}

TEST_CASE("smallest minimal cycle length is t+3") {
    CHECK(min_minimal_cycle_length(build_family({FamilyKind::B, 3})) == 6);
    CHECK(min_minimal_cycle_length(build_family({FamilyKind::D1, 1})) == 4);
}

TEST_CASE("recognition round trip and negatives") {
    for (auto kind : kAllKinds) {
        int tmax = (kind == FamilyKind::A1 || kind == FamilyKind::A2 || kind == FamilyKind::A3) ? 5
                   : kind == FamilyKind::B                                                      ? 4
                                                                                                : 1;
        for (int t = 1; t <= tmax; ++t) {
            FamilySpec spec{kind, t};
            auto hit = recognize_family(build_family(spec));
            REQUIRE(hit.has_value());
            CHECK(*hit == spec);
        }
    }
    CHECK_FALSE(recognize_family(cycle_graph(6)).has_value());
    CHECK_FALSE(recognize_family(complete_graph(5)).has_value());

    std::mt19937 rng(61);
    SimpleGraph d2 = build_family({FamilyKind::D2, 1});
    for (int k = 0; k < 10; ++k) {
        auto hit = recognize_family(apply_permutation(d2, random_permutation(rng, 6)));
        REQUIRE(hit.has_value());
        CHECK(hit->kind == FamilyKind::D2);
    }
}

TEST_CASE("no two distinct specs on the same vertex count are isomorphic") {
    for (int n = 5; n <= 9; ++n) {
        std::vector<FamilySpec> same_n;
        for (auto kind : kAllKinds) {
            for (int t = 1; t <= 4; ++t) {
                FamilySpec spec{kind, t};
                bool parametric = kind == FamilyKind::A1 || kind == FamilyKind::A2 ||
                                  kind == FamilyKind::A3 || kind == FamilyKind::B;
                if (!parametric && t > 1) continue;
                if (spec.vertex_count() == n) same_n.push_back(spec);
            }
        }
        for (size_t i = 0; i < same_n.size(); ++i)
            for (size_t j = i + 1; j < same_n.size(); ++j)
                CHECK_FALSE(is_isomorphic(build_family(same_n[i]), build_family(same_n[j])));
    }
}

TEST_CASE("complements of family graphs have no isolated vertices") {
    for (const auto& spec : specs_up_to(4)) {
        SimpleGraph g = complement(build_family(spec));
        for (int v = 1; v <= g.vertex_count(); ++v) CHECK(g.degree(v) >= 1);
    }
}

TEST_CASE("expected nonlinear betti data") {
    auto a3 = expected_nonlinear_betti({FamilyKind::A3, 2});
    CHECK(a3.beta_t_t3 == 2);
    CHECK(a3.beta_t1_t3 == 0);
    CHECK(a3.beta_t1_t4 == 1);
    CHECK(a3.beta_t1_t5 == 0);
    CHECK(a3.reg == 3);
    CHECK(a3.index == 2);
    CHECK(a3.pd == 3);

    auto d1 = expected_nonlinear_betti({FamilyKind::D1, 1});
    CHECK(d1.beta_t_t3 == 3);
    CHECK(d1.beta_t1_t4 == 0);
    CHECK(d1.beta_t1_t5 == 1);
    CHECK(d1.reg == 4);

    auto b = expected_nonlinear_betti({FamilyKind::B, 1});
    CHECK(b.beta_t_t3 == 1);
    CHECK(b.beta_t1_t3 == 1);
    CHECK(b.beta_t1_t4 == 1);
    CHECK(b.beta_t1_t5 == 0);
}

TEST_CASE("computed tables match the expected nonlinear data (t <= 2)") {
    for (const auto& spec : specs_up_to(2)) {
        SimpleGraph g = complement(build_family(spec));
        auto e = expected_nonlinear_betti(spec);
        int t = e.t;
        for (auto f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
            BettiTable table = hochster_betti(g, HochsterOptions{f, false, 0});
            CHECK(table.get(t, t + 3) == e.beta_t_t3);
            CHECK(table.get(t + 1, t + 3) == e.beta_t1_t3);
            CHECK(table.get(t + 1, t + 4) == e.beta_t1_t4);
            CHECK(table.get(t + 1, t + 5) == e.beta_t1_t5);
            CHECK(table.get(t, t + 4) == 0);
            CHECK(table.get(t, t + 5) == 0);
            ResolutionStats s = resolution_stats(table);
            CHECK(s.index == e.index);
            CHECK(s.pd == e.pd);
            CHECK(s.reg == e.reg);
            CHECK(s.almost_maximal);
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build_family({FamilyKind::A1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_family({FamilyKind::C, 2}), std::invalid_argument);
    CHECK_THROWS_AS(recognize_family(SimpleGraph(10)), std::invalid_argument);
}
