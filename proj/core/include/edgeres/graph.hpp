#ifndef EDGERES_GRAPH_HPP
#define EDGERES_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edgeres {

// Subset of the vertex set {1,...,n}, n <= 64.  Vertex v occupies bit v-1.
struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t raw) : bits(raw) {}

    static VertexSet full(int n) { return VertexSet(n == 64 ? ~0ull : (1ull << n) - 1); }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    bool contains(int v) const { return (bits >> (v - 1)) & 1ull; }
    void add(int v) { bits |= 1ull << (v - 1); }
    void remove(int v) { bits &= ~(1ull << (v - 1)); }
    int count() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }
    bool subset_of(const VertexSet& o) const { return (bits & ~o.bits) == 0; }

    // Members in ascending order, 1-based.
    std::vector<int> to_vector() const;

    bool operator==(const VertexSet& o) const { return bits == o.bits; }
    bool operator!=(const VertexSet& o) const { return bits != o.bits; }
};

// Loopless undirected graph on vertices 1..n, adjacency bitsets.
// Immutable through the public API once built; all operations are pure.
class SimpleGraph {
  public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    VertexSet neighbors(int v) const { return VertexSet(adj_[v - 1]); }
    int degree(int v) const { return __builtin_popcountll(adj_[v - 1]); }

    // Edges as pairs (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;  // adj_[v-1] has bit u-1 set iff {u,v} is an edge

    void check_vertex(int v) const;
};

SimpleGraph complement(const SimpleGraph& g);

// Induced subgraph on w, vertices relabeled 1..|w| preserving order.
// vertex_map[i] is the original label of new vertex i+1.
struct InducedSubgraph {
    SimpleGraph graph;
    std::vector<int> vertex_map;
};
InducedSubgraph induced_subgraph(const SimpleGraph& g, VertexSet w);

bool is_connected(const SimpleGraph& g);

// Chordless cycle, stored in canonical rotation: starts at its minimum
// vertex and the second entry is the smaller of that vertex's two
// cycle-neighbours.
struct InducedCycle {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const InducedCycle& o) const { return vertices == o.vertices; }
    bool operator<(const InducedCycle& o) const;
};

InducedCycle canonical_cycle(const std::vector<int>& vertices);

// All chordless cycles of length >= min_len (min_len >= 3), found by testing
// every vertex subset for inducing a single cycle.  Requires n <= 20.
std::vector<InducedCycle> enumerate_induced_cycles(const SimpleGraph& g, int min_len);

// Minimum length of an induced cycle of length > 3; empty iff chordal.
std::optional<int> min_minimal_cycle_length(const SimpleGraph& g);

// Maximum-cardinality search plus perfect-elimination-order verification.
bool is_chordal(const SimpleGraph& g);

enum class Pattern { gap, cricket, diamond, c4 };
Pattern pattern_parse(const std::string& s);

// True iff g contains an induced subgraph isomorphic to the pattern.
bool detect_pattern(const SimpleGraph& g, Pattern pattern);

// Canonical byte-string: 1 byte n, then the minimum over all vertex
// permutations of the upper-triangle adjacency bits in colex pair order
// ((1,2),(1,3),(2,3),(1,4),...), packed MSB-first.  Equal strings <=>
// isomorphic graphs.  Brute-force with prefix pruning; requires n <= 9.
std::string canonical_form(const SimpleGraph& g);

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

SimpleGraph graph_from_canonical_form(const std::string& form);

SimpleGraph apply_permutation(const SimpleGraph& g, const std::vector<int>& perm);

}  // namespace edgeres

#endif
