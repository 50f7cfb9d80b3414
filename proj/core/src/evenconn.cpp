#include "edgeres/evenconn.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace edgeres {

namespace {

struct MultisetIndex {
    std::vector<std::pair<int, int>> distinct;
    std::vector<int> multiplicity;

    explicit MultisetIndex(const SimpleGraph& g, const EdgeMultiset& edges) {
        for (auto [u, v] : edges) {
            if (u > v) std::swap(u, v);
            if (!g.has_edge(u, v))
                throw std::invalid_argument("even-connection: multiset edge {" + std::to_string(u) + "," +
                                            std::to_string(v) + "} is not an edge of the graph");
            auto it = std::find(distinct.begin(), distinct.end(), std::make_pair(u, v));
            if (it == distinct.end()) {
                distinct.emplace_back(u, v);
                multiplicity.push_back(1);
            } else {
                ++multiplicity[static_cast<size_t>(it - distinct.begin())];
            }
        }
    }

    // mixed-radix encoding of a remaining-multiplicity vector
    int encode(const std::vector<int>& rem) const {
        int code = 0;
        for (size_t i = 0; i < rem.size(); ++i) code = code * (multiplicity[i] + 1) + rem[i];
        return code;
    }
};

}  // namespace

VertexSet even_connected_targets(const SimpleGraph& g, int u, const EdgeMultiset& edges) {
    MultisetIndex mi(g, edges);
    // states: (vertex, remaining multiset); A-states are about to take an
    // ordinary step, B-states have just arrived on one and may stop
    std::set<std::pair<int, int>> seen_a, seen_b;
    std::vector<std::pair<int, std::vector<int>>> stack_a{{u, mi.multiplicity}};
    VertexSet out;
    std::vector<std::pair<int, std::vector<int>>> stack_b;
    auto push_a = [&](int v, const std::vector<int>& rem) {
        if (seen_a.insert({v, mi.encode(rem)}).second) stack_a.emplace_back(v, rem);
    };
    auto push_b = [&](int v, const std::vector<int>& rem, bool consumed) {
        if (consumed) out.add(v);  // p_{2k+1} with k >= 1
        if (seen_b.insert({v, mi.encode(rem)}).second) stack_b.emplace_back(v, rem);
    };
    while (!stack_a.empty() || !stack_b.empty()) {
        if (!stack_b.empty()) {
            auto [v, rem] = stack_b.back();
            stack_b.pop_back();
            // odd step: consume a multiset edge at v
            for (size_t i = 0; i < mi.distinct.size(); ++i) {
                if (rem[i] == 0) continue;
                auto [a, b] = mi.distinct[i];
                if (v != a && v != b) continue;
                auto rem2 = rem;
                --rem2[i];
                push_a(v == a ? b : a, rem2);
            }
            continue;
        }
        auto [v, rem] = stack_a.back();
        stack_a.pop_back();
        bool consumed = mi.encode(rem) != mi.encode(mi.multiplicity);
        for (int w : g.neighbors(v).to_vector()) push_b(w, rem, consumed);
    }
    return out;
}

bool is_even_connected(const SimpleGraph& g, int u, int v, const EdgeMultiset& edges) {
    return even_connected_targets(g, u, edges).contains(v);
}

SimpleGraph even_connection_graph(const SimpleGraph& g, const EdgeMultiset& edges) {
    int n = g.vertex_count();
    std::vector<VertexSet> targets;
    targets.reserve(static_cast<size_t>(n));
    std::vector<int> whisker_at;
    for (int u = 1; u <= n; ++u) {
        targets.push_back(even_connected_targets(g, u, edges));
        if (targets.back().contains(u)) whisker_at.push_back(u);
    }
    SimpleGraph h(n + static_cast<int>(whisker_at.size()));
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int u = 1; u <= n; ++u)
        for (int v : targets[static_cast<size_t>(u - 1)].to_vector())
            if (v != u) h.add_edge(u, v);
    for (size_t i = 0; i < whisker_at.size(); ++i) h.add_edge(whisker_at[i], n + static_cast<int>(i) + 1);
    return h;
}

bool verify_even_connection_lemma(const SimpleGraph& g, const EdgeMultiset& edges) {
    int n = g.vertex_count();
    int s = static_cast<int>(edges.size());
    MonomialIdeal ideal = edge_ideal(g);
    Monomial m = Monomial::one(n);
    for (auto [u, v] : edges) {
        ++m.exps[static_cast<size_t>(u - 1)];
        ++m.exps[static_cast<size_t>(v - 1)];
    }
    MonomialIdeal colon = colon_ideal(ideal_power(ideal, s + 1), m);
    Polarization pol = polarize(colon);

    // any non-quadratic generator falsifies the description outright
    for (const auto& gen : pol.ideal.gens)
        if (gen.degree() != 2) return false;

    // polarized copy variables map to whisker vertices n+1.. in base order
    std::vector<int> var_to_vertex(pol.ideal.vars.size(), 0);
    int next = n;
    for (size_t k = 0; k < pol.var_origin.size(); ++k) {
        auto [base, copy] = pol.var_origin[k];
        if (copy == 1) {
            var_to_vertex[k] = base + 1;
        } else if (copy == 2) {
            var_to_vertex[k] = ++next;
        } else {
            return false;  // a cube in the colon ideal: not an edge ideal shape
        }
    }

    SimpleGraph from_colon(next);
    for (const auto& gen : pol.ideal.gens) {
        auto sup = gen.support();
        from_colon.add_edge(var_to_vertex[static_cast<size_t>(sup[0])], var_to_vertex[static_cast<size_t>(sup[1])]);
    }
    return from_colon == even_connection_graph(g, edges);
}

}  // namespace edgeres
