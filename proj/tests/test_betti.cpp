#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>
#include <sstream>

#include "edgeres/betti.hpp"
#include "edgeres/families.hpp"
#include "edgeres/monomial.hpp"
#include "test_util.hpp"

using namespace edgeres;
using namespace edgeres::testutil;

namespace {

MonomialIdeal ideal_of(const std::string& text) {
    std::istringstream in(text);
    return read_ideal_text(in);
}

MonomialIdeal random_ideal(std::mt19937& rng, int nvars, int ngens, int max_deg) {
    std::vector<Monomial> gens;
    for (int k = 0; k < ngens; ++k) {
        Monomial m = Monomial::one(nvars);
        int deg = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_deg));
        for (int d = 0; d < deg; ++d) ++m.exps[rng() % static_cast<unsigned>(nvars)];
        gens.push_back(std::move(m));
    }
    return minimalize(default_vars(nvars), std::move(gens));
}

}  // namespace

TEST_CASE("two disjoint edges: complete intersection of two quadrics") {
    SimpleGraph g = SimpleGraph::from_edges(4, {{1, 2}, {3, 4}});
    BettiTable t = hochster_betti(g);
    CHECK(t.get(0, 2) == 2);
    CHECK(t.get(1, 4) == 1);
    CHECK(t.entries.size() == 2);

    ResolutionStats s = resolution_stats(t);
    CHECK(s.index == 1);
    CHECK(s.pd == 1);
    CHECK(s.reg == 3);
    CHECK_FALSE(s.almost_maximal);  // maximal finite index
}

TEST_CASE("family complements reproduce the expected corner Betti numbers") {
    // complement of the A1 graph at t=1
    SimpleGraph g = complement(build_family({FamilyKind::A1, 1}));
    BettiTable t = hochster_betti(g);
    CHECK(t.get(1, 4) == 1);
    CHECK(t.get(2, 4) == 1);
    CHECK(t.get(2, 5) == 1);
    CHECK(resolution_stats(t).pd == 2);

    SimpleGraph gd1 = complement(build_family({FamilyKind::D1, 1}));
    BettiTable td = hochster_betti(gd1);
    CHECK(td.get(2, 6) == 1);
    CHECK(resolution_stats(td).reg == 4);

    SimpleGraph gc = complement(build_family({FamilyKind::C, 1}));
    ResolutionStats sc = resolution_stats(hochster_betti(gc));
    CHECK(sc.index == 1);
    CHECK(sc.pd == 2);
    CHECK(sc.reg == 3);
    CHECK(sc.almost_maximal);
}

TEST_CASE("chordal complement gives a linear resolution") {
    // complement of a path is chordal-complement input: take g with gbar a tree
    SimpleGraph gbar = path_graph(5);
    SimpleGraph g = complement(gbar);
    ResolutionStats s = resolution_stats(hochster_betti(g));
    CHECK(s.linear);
    CHECK_FALSE(s.index.has_value());
    CHECK(s.reg == 2);
}

TEST_CASE("betti_squarefree basics") {
    auto principal = ideal_of("x1*x2*x3\n");
    BettiTable t = betti_squarefree(principal);
    CHECK(t.d == 3);
    CHECK(t.get(0, 3) == 1);
    CHECK(t.entries.size() == 1);

    std::mt19937 rng(41);
    for (int k = 0; k < 30; ++k) {
        SimpleGraph g = random_graph(rng, 7);
        CHECK(betti_squarefree(edge_ideal(g)) == hochster_betti(g));
    }

    CHECK_THROWS_AS(betti_squarefree(ideal_of("x1^2\n")), std::invalid_argument);
}

TEST_CASE("taylor oracle on closed forms") {
    auto ci = ideal_of("x1*x2\nx3*x4\n");
    BettiTable t = betti_via_taylor(ci, FieldSpec::rationals());
    CHECK(t.get(0, 2) == 2);
    CHECK(t.get(1, 4) == 1);
    CHECK(t.entries.size() == 2);

    auto tri = ideal_of("x1*x2\nx2*x3\nx1*x3\n");
    BettiTable tt = betti_via_taylor(tri, FieldSpec::rationals());
    CHECK(tt.get(0, 2) == 3);
    CHECK(tt.get(1, 3) == 2);
    CHECK(tt.entries.size() == 2);
}

TEST_CASE("polarization of the square of the maximal ideal in two variables") {
    auto i = ideal_of("x1^2\nx1*x2\nx2^2\n");
    BettiTable via_taylor = betti_via_taylor(i, FieldSpec::rationals());
    CHECK(via_taylor.get(0, 2) == 3);
    CHECK(via_taylor.get(1, 3) == 2);
    BettiTable via_pol = betti_of_monomial_ideal(i);
    CHECK(via_pol == via_taylor);
}

TEST_CASE("taylor oracle agrees with the polarization route") {
    std::mt19937 rng(43);
    for (int k = 0; k < 40; ++k) {
        MonomialIdeal i = random_ideal(rng, 4 + static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % 5), 3);
        if (i.is_zero()) continue;
        for (auto f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
            CHECK(betti_via_taylor(i, f) == betti_of_monomial_ideal(i, HochsterOptions{f, false, 0}));
        }
    }
    // all seven family edge ideals at t=1
    for (auto kind : {FamilyKind::A1, FamilyKind::A2, FamilyKind::A3, FamilyKind::B, FamilyKind::C,
                      FamilyKind::D1, FamilyKind::D2}) {
        MonomialIdeal i = edge_ideal(complement(build_family({kind, 1})));
        CHECK(betti_via_taylor(i, FieldSpec::rationals()) == betti_of_monomial_ideal(i));
    }
}

TEST_CASE("index via cycles matches Hochster on small graphs over several fields") {
    // self-complementary C5: complement of C5 is C5
    CHECK(index_via_cycles(complement(cycle_graph(5))) == 2);
    CHECK_FALSE(index_via_cycles(complement(path_graph(5))).has_value());
    CHECK(index_via_cycles(complement(build_family({FamilyKind::B, 3}))) == 3);

    std::mt19937 rng(47);
    int tested = 0;
    while (tested < 60) {
        int n = 2 + static_cast<int>(rng() % 7);
        SimpleGraph g = random_graph(rng, n);
        if (g.edge_count() == 0) continue;
        ++tested;
        auto combinatorial = index_via_cycles(g);
        for (auto f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
            BettiTable t = hochster_betti(g, HochsterOptions{f, false, 0});
            ResolutionStats s = resolution_stats(t);
            CHECK(s.index == combinatorial);
            CHECK(t.get(0, 2) == g.edge_count());
            for (const auto& [ij, v] : t.entries) CHECK(ij.second <= n);
        }
    }
}

TEST_CASE("nonlinear-only mode matches the nonlinear part of the full table") {
    std::mt19937 rng(53);
    for (int k = 0; k < 25; ++k) {
        SimpleGraph g = random_graph(rng, 7);
        if (g.edge_count() == 0) continue;
        BettiTable full = hochster_betti(g);
        BettiTable nl = hochster_betti(g, HochsterOptions{FieldSpec::rationals(), true, 0});
        CHECK(nl.nonlinear_only);
        BettiTable expect;
        expect.d = full.d;
        expect.nonlinear_only = true;
        for (const auto& [ij, v] : full.entries)
            if (ij.second > ij.first + full.d) expect.add(ij.first, ij.second, v);
        CHECK(nl == expect);
        ResolutionStats s = resolution_stats(full);
        CHECK(reg_of_table(nl) == s.reg);
        CHECK(index_of_table(nl) == s.index);
        CHECK_THROWS_AS(resolution_stats(nl), std::invalid_argument);
    }
}

TEST_CASE("tables are identical across thread counts") {
    SimpleGraph g = complement(build_family({FamilyKind::B, 2}));
    BettiTable t1 = hochster_betti(g, HochsterOptions{FieldSpec::rationals(), false, 1});
    BettiTable t4 = hochster_betti(g, HochsterOptions{FieldSpec::rationals(), false, 4});
    BettiTable t8 = hochster_betti(g, HochsterOptions{FieldSpec::rationals(), false, 8});
    CHECK(t1 == t4);
    CHECK(t1 == t8);
    CHECK(t1.to_tsv() == t4.to_tsv());
}

TEST_CASE("almost-maximality predicate") {
    CHECK(is_almost_maximal(complement(build_family({FamilyKind::A2, 2})), FieldSpec::rationals()));
    CHECK_FALSE(is_almost_maximal(complement(cycle_graph(6)), FieldSpec::rationals()));
    CHECK_FALSE(is_almost_maximal(SimpleGraph::from_edges(2, {{1, 2}}), FieldSpec::rationals()));
}

TEST_CASE("stats guard rails") {
    BettiTable empty;
    CHECK_THROWS_AS(resolution_stats(empty), std::invalid_argument);
    CHECK(hochster_betti(SimpleGraph(3)).entries.empty());
    CHECK_THROWS_AS(hochster_betti(complement(SimpleGraph(23))), std::invalid_argument);
}

TEST_CASE("tsv ordering") {
    SimpleGraph g = complement(build_family({FamilyKind::A1, 1}));
    std::string tsv = hochster_betti(g).to_tsv();
    CHECK(tsv.find("0\t2\t") == 0);  // first line is the (0,2) entry
    CHECK(tsv.find("2\t5\t1") != std::string::npos);
}

TEST_CASE("a degree-3 ideal with characteristic-dependent resolution") {
    // Stanley-Reisner ideal of the 6-vertex projective plane: linear
    // resolution away from characteristic 2, index = pd - 1 in it
    std::vector<Monomial> gens;
    for (auto tri : {std::array<int, 3>{4, 5, 6}, {3, 5, 6}, {2, 4, 6}, {2, 3, 5}, {2, 3, 4},
                     {1, 4, 5}, {1, 3, 6}, {1, 3, 4}, {1, 2, 6}, {1, 2, 5}}) {
        Monomial m = Monomial::one(6);
        for (int v : tri) m.exps[static_cast<size_t>(v - 1)] = 1;
        gens.push_back(m);
    }
    MonomialIdeal i = minimalize(default_vars(6), gens);

    BettiTable tq = betti_squarefree(i);
    ResolutionStats sq = resolution_stats(tq);
    CHECK(sq.linear);
    CHECK(sq.pd == 2);
    CHECK(sq.reg == 3);

    BettiTable t2 = betti_squarefree(i, HochsterOptions{FieldSpec::prime(2), false, 0});
    ResolutionStats s2 = resolution_stats(t2);
    CHECK(s2.index == 2);
    CHECK(s2.pd == 3);
    CHECK(s2.reg == 4);
    CHECK(t2.get(2, 6) == 1);
    CHECK(t2.get(3, 6) == 1);

    CHECK(betti_squarefree(i, HochsterOptions{FieldSpec::prime(3), false, 0}) == tq);
    // the Taylor oracle confirms both fields
    CHECK(betti_via_taylor(i, FieldSpec::rationals()) == tq);
    CHECK(betti_via_taylor(i, FieldSpec::prime(2)) == t2);
}
