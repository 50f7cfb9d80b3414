#ifndef EDGERES_EVENCONN_HPP
#define EDGERES_EVENCONN_HPP

#include <utility>
#include <vector>

#include "edgeres/graph.hpp"
#include "edgeres/monomial.hpp"

namespace edgeres {

// Multiset of edges of g, as (u,v) pairs with u < v; repetitions allowed.
using EdgeMultiset = std::vector<std::pair<int, int>>;

// u and v are even-connected with respect to the multiset iff there is a walk
// u = p_0 - ... - p_{2k+1} = v, k >= 1, whose odd steps are drawn from the
// multiset without exceeding multiplicities and whose every step is an edge
// of g.  u = v is allowed.
bool is_even_connected(const SimpleGraph& g, int u, int v, const EdgeMultiset& edges);

// All v even-connected to u (possibly including u itself).
VertexSet even_connected_targets(const SimpleGraph& g, int u, const EdgeMultiset& edges);

// The graph with E(g) plus an edge for every even-connected pair and a
// whisker (u,u') for every u even-connected to itself; whisker vertices are
// appended after n in ascending order of u.
SimpleGraph even_connection_graph(const SimpleGraph& g, const EdgeMultiset& edges);

// Mechanical check of the colon-ideal description: the edge ideal of
// even_connection_graph(g, edges) must equal the polarization of
// (I(g)^{s+1} : prod of edge monomials), under the whisker naming above.
bool verify_even_connection_lemma(const SimpleGraph& g, const EdgeMultiset& edges);

}  // namespace edgeres

#endif
