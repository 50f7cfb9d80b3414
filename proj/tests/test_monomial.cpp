#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <sstream>

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

Monomial var(const MonomialIdeal& i, int v1based, int e = 1) {
    Monomial m = Monomial::one(static_cast<int>(i.vars.size()));
    m.exps[static_cast<size_t>(v1based - 1)] = e;
    return m;
}

// ambient x1..x_{t+4}: complement of the cycle on [t+3], times the variable
// block (x3..x_{t+4}), as in the quotient filtration
MonomialIdeal step_ideal(int t, int s) {
    SimpleGraph cyc = cycle_graph(t + 3);
    SimpleGraph cbar = complement(cyc);
    auto vars = default_vars(t + 4);
    std::vector<Monomial> gens;
    for (auto [u, v] : cbar.edges()) {
        Monomial m = Monomial::one(t + 4);
        m.exps[static_cast<size_t>(u - 1)] = m.exps[static_cast<size_t>(v - 1)] = 1;
        gens.push_back(m);
    }
    MonomialIdeal icbar = minimalize(vars, gens);
    std::vector<int> tail;
    for (int i = 3; i <= t + 4; ++i) tail.push_back(i - 1);
    if (s == 0) return variable_ideal(vars, tail);
    return ideal_product(ideal_power(icbar, s), variable_ideal(vars, tail));
}

MonomialIdeal b_family_colon(int t, int s) {
    SimpleGraph g = complement(build_family({FamilyKind::B, t}));
    MonomialIdeal ideal = edge_ideal(g);
    Monomial x = var(ideal, t + 5);
    return colon_ideal(ideal_power(ideal, s + 1), x);
}

}  // namespace

TEST_CASE("edge ideal basics") {
    MonomialIdeal tri = edge_ideal(complete_graph(3));
    CHECK(tri.gens.size() == 3);
    CHECK(tri.render(tri.gens[0]) == "x1*x2");
    CHECK(edge_ideal(SimpleGraph(4)).is_zero());
    std::mt19937 rng(3);
    for (int k = 0; k < 20; ++k) {
        SimpleGraph g = random_graph(rng, 7);
        CHECK(static_cast<int>(edge_ideal(g).gens.size()) == g.edge_count());
    }
}

TEST_CASE("minimalize") {
    auto i = ideal_of("x1\nx1*x2\n");
    CHECK(i.gens.size() == 1);
    CHECK(i.render(i.gens[0]) == "x1");
    auto dup = ideal_of("x1*x2\nx1*x2\n");
    CHECK(dup.gens.size() == 1);
    // idempotent
    auto again = minimalize(dup.vars, dup.gens);
    CHECK(again == dup);
}

TEST_CASE("ideal powers") {
    auto p = ideal_of("x1*x2\n");
    auto p2 = ideal_power(p, 2);
    CHECK(p2.gens.size() == 1);
    CHECK(p2.render(p2.gens[0]) == "x1^2*x2^2");

    MonomialIdeal path = edge_ideal(path_graph(3));
    auto sq = ideal_power(path, 2);
    std::vector<std::string> rendered;
    for (const auto& m : sq.gens) rendered.push_back(sq.render(m));
    CHECK(rendered == std::vector<std::string>{"x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"});
}

TEST_CASE("generator count of the square for the B-family complement, against brute force") {
    SimpleGraph g = complement(build_family({FamilyKind::B, 1}));
    MonomialIdeal ideal = edge_ideal(g);
    // oracle: enumerate all pairwise products and deduplicate
    std::set<std::vector<int>> products;
    for (const auto& a : ideal.gens)
        for (const auto& b : ideal.gens) products.insert(a.times(b).exps);
    MonomialIdeal sq = ideal_power(ideal, 2);
    CHECK(sq.gens.size() == products.size());
    CHECK(sq.gens.size() == 15);  // frozen from the first oracle run
}

TEST_CASE("ideal sum and colon") {
    auto a = ideal_of("x1*x2\nx1\n");  // minimalizes to (x1)
    auto b = MonomialIdeal::zero(a.vars);
    CHECK(ideal_sum(a, b) == a);

    auto i = ideal_of("x1*x2\nx2*x3\n");
    auto c = colon_ideal(i, var(i, 2));
    std::vector<std::string> rendered;
    for (const auto& m : c.gens) rendered.push_back(c.render(m));
    CHECK(rendered == std::vector<std::string>{"x1", "x3"});
    CHECK(colon_ideal(i, Monomial::one(3)) == i);

    CHECK_THROWS_AS(ideal_sum(i, ideal_of("x9\n")), std::invalid_argument);
}

TEST_CASE("colon of the B-family square decomposes into the two variable blocks") {
    // (I^2 : x6) = I(Cbar) (x3,x4,x5) + x6 (x3,x4,x5)^2 for t = 1
    MonomialIdeal colon = b_family_colon(1, 1);
    MonomialIdeal icbar = ideal_of("x1*x3\nx2*x4\n# pad\n");
    // rebuild on 6 variables
    SimpleGraph g = complement(build_family({FamilyKind::B, 1}));
    MonomialIdeal ideal = edge_ideal(g);
    auto vars = ideal.vars;
    MonomialIdeal cb = minimalize(vars, {var(ideal, 1).times(var(ideal, 3)), var(ideal, 2).times(var(ideal, 4))});
    MonomialIdeal tails = variable_ideal(vars, {2, 3, 4});
    MonomialIdeal l0 = ideal_product(cb, tails);
    MonomialIdeal l1 = ideal_product(variable_ideal(vars, {5}), ideal_power(tails, 2));
    CHECK(colon == ideal_sum(l0, l1));
}

TEST_CASE("power plus cone variable collapses to the cycle-complement part") {
    // I^s + (x_{t+5}) = I(Cbar)^s + (x_{t+5}) for the B family, t=1, s=2
    SimpleGraph g = complement(build_family({FamilyKind::B, 1}));
    MonomialIdeal ideal = edge_ideal(g);
    auto vars = ideal.vars;
    MonomialIdeal x6 = variable_ideal(vars, {5});
    MonomialIdeal cb = minimalize(vars, {var(ideal, 1).times(var(ideal, 3)), var(ideal, 2).times(var(ideal, 4))});
    CHECK(ideal_sum(ideal_power(ideal, 2), x6) == ideal_sum(ideal_power(cb, 2), x6));
}

TEST_CASE("polarization") {
    auto i = ideal_of("x1^2*x2\n");
    auto pol = polarize(i);
    CHECK(pol.ideal.vars == std::vector<std::string>{"x1", "x2", "x1_2"});
    CHECK(pol.ideal.render(pol.ideal.gens[0]) == "x1*x2*x1_2");
    CHECK(pol.var_origin == std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {0, 2}});

    auto sf = ideal_of("x1*x2\nx2*x3\n");
    auto pol2 = polarize(sf);
    CHECK(pol2.ideal == sf);
}

TEST_CASE("linear quotients check") {
    auto tri = ideal_of("x1*x2\nx1*x3\nx2*x3\n");
    CHECK(check_linear_quotients(OrderedGenerators::plain(tri)).ok);

    auto ci = ideal_of("x1*x2\nx3*x4\n");
    auto rep = check_linear_quotients(OrderedGenerators::plain(ci));
    REQUIRE_FALSE(rep.ok);
    CHECK(rep.witness->q == 1);
    CHECK(rep.witness->l == 2);
    CHECK(rep.witness->quotient.degree() == 2);
}

TEST_CASE("block order: explicit listing for the smallest instance") {
    // t=1, s=1: the (1,3) block precedes the (2,4) block, tails ascending
    MonomialIdeal L = step_ideal(1, 1);
    auto ord = banerjee_order(L, 4, 1);
    std::vector<std::string> rendered;
    for (const auto& e : ord.entries) rendered.push_back(L.render(e.m));
    CHECK(rendered == std::vector<std::string>{"x1*x3^2", "x1*x3*x4", "x1*x3*x5", "x2*x3*x4",
                                               "x2*x4^2", "x2*x4*x5"});
    for (const auto& e : ord.entries) CHECK(e.block == 0);
}

TEST_CASE("block order: first generator and block count") {
    for (int t : {1, 2}) {
        for (int s : {1, 2}) {
            MonomialIdeal L = step_ideal(t, s);
            auto ord = banerjee_order(L, t + 3, s);
            // smallest edge multiset is s copies of {1,3}, smallest tail x3
            Monomial first = Monomial::one(t + 4);
            first.exps[0] = s;
            first.exps[2] = s + 1;
            CHECK(ord.entries.front().m == first);

            MonomialIdeal colon = b_family_colon(t, s);
            auto ordc = banerjee_order(colon, t + 3, s);
            std::set<int> blocks;
            for (const auto& e : ordc.entries) blocks.insert(e.block);
            CHECK(static_cast<int>(blocks.size()) == s + 1);  // L_0 .. L_s
            Monomial first6 = Monomial::one(t + 5);
            first6.exps[0] = s;
            first6.exps[2] = s + 1;
            CHECK(ordc.entries.front().m == first6);
        }
    }
}

TEST_CASE("block order has linear quotients on the colon and step ideals") {
    for (int t : {1, 2}) {
        for (int s : {0, 1, 2}) {
            CHECK(check_linear_quotients(banerjee_order(step_ideal(t, s), t + 3, s)).ok);
            CHECK(check_linear_quotients(banerjee_order(b_family_colon(t, s), t + 3, s)).ok);
        }
    }
}

TEST_CASE("block order rejects foreign ideals") {
    auto foreign = ideal_of("x1*x2\nx3*x4\nx5*x5\n");
    (void)foreign;
    MonomialIdeal bad = minimalize(default_vars(5), {Monomial({1, 1, 0, 0, 0})});
    CHECK_THROWS_AS(banerjee_order(bad, 4, 1), std::invalid_argument);
}

TEST_CASE("colon of a power by a power generator is quadratic for edge ideals") {
    std::mt19937 rng(19);
    int done = 0;
    while (done < 25) {
        SimpleGraph g = random_graph(rng, 5);
        MonomialIdeal ideal = edge_ideal(g);
        if (ideal.gens.size() < 2) continue;
        ++done;
        int s = 1 + static_cast<int>(rng() % 2);
        MonomialIdeal ps = ideal_power(ideal, s);
        const Monomial& mk = ps.gens[rng() % ps.gens.size()];
        MonomialIdeal colon = colon_ideal(ideal_power(ideal, s + 1), mk);
        for (const auto& m : colon.gens) CHECK(m.degree() <= 2);
    }
}

TEST_CASE("ideal io round trips") {
    auto i = ideal_of("x1^2*x3\nx2*x10\n");
    CHECK(i.vars == std::vector<std::string>{"x1", "x2", "x3", "x10"});  // natural order
    std::ostringstream out;
    write_ideal_text(out, i);
    std::istringstream back(out.str());
    CHECK(read_ideal_text(back) == i);
    CHECK(ideal_from_json(ideal_to_json(i)) == i);
}
