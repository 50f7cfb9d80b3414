#ifndef EDGERES_TEST_UTIL_HPP
#define EDGERES_TEST_UTIL_HPP

#include <random>

#include "edgeres/graph.hpp"

namespace edgeres::testutil {

inline SimpleGraph cycle_graph(int n) {
    SimpleGraph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(1, n);
    return g;
}

inline SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

inline SimpleGraph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i + 1;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace edgeres::testutil

#endif
