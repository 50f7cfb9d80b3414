#include "edgeres/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgeres {

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    std::uint64_t b = bits;
    while (b) {
        int i = __builtin_ctzll(b);
        out.push_back(i + 1);
        b &= b - 1;
    }
    return out;
}

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0)), 0) {
    if (n < 0 || n > 64) throw std::invalid_argument("SimpleGraph: vertex count must be in [0,64]");
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("SimpleGraph: vertex " + std::to_string(v) + " out of range");
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u - 1] >> (v - 1)) & 1ull;
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("SimpleGraph: self-loop rejected");
    adj_[u - 1] |= 1ull << (v - 1);
    adj_[v - 1] |= 1ull << (u - 1);
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (auto row : adj_) total += __builtin_popcountll(row);
    return total / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u) {
        std::uint64_t above = u >= 64 ? 0ull : adj_[u - 1] & ~((1ull << u) - 1);
        for (int v : VertexSet(above).to_vector()) out.emplace_back(u, v);
    }
    return out;
}

SimpleGraph complement(const SimpleGraph& g) {
    int n = g.vertex_count();
    SimpleGraph h(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, VertexSet w) {
    if (!w.subset_of(VertexSet::full(g.vertex_count())))
        throw std::invalid_argument("induced_subgraph: w is not a subset of the vertex set");
    std::vector<int> map = w.to_vector();
    SimpleGraph h(static_cast<int>(map.size()));
    for (size_t i = 0; i < map.size(); ++i)
        for (size_t j = i + 1; j < map.size(); ++j)
            if (g.has_edge(map[i], map[j])) h.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return {h, map};
}

bool is_connected(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("is_connected: undefined on the empty graph");
    std::uint64_t seen = 1ull, frontier = 1ull;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v : VertexSet(frontier).to_vector()) next |= g.neighbors(v).bits;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == VertexSet::full(n).bits;
}

bool InducedCycle::operator<(const InducedCycle& o) const {
    if (vertices.size() != o.vertices.size()) return vertices.size() < o.vertices.size();
    return vertices < o.vertices;
}

InducedCycle canonical_cycle(const std::vector<int>& vs) {
    int r = static_cast<int>(vs.size());
    if (r < 3) throw std::invalid_argument("canonical_cycle: need at least 3 vertices");
    int mi = static_cast<int>(std::min_element(vs.begin(), vs.end()) - vs.begin());
    auto at = [&](int i) { return vs[((i % r) + r) % r]; };
    std::vector<int> out;
    out.reserve(r);
    int dir = at(mi + 1) < at(mi - 1) ? 1 : -1;
    for (int k = 0; k < r; ++k) out.push_back(at(mi + dir * k));
    return InducedCycle{out};
}

std::vector<InducedCycle> enumerate_induced_cycles(const SimpleGraph& g, int min_len) {
    int n = g.vertex_count();
    if (min_len < 3) throw std::invalid_argument("enumerate_induced_cycles: min_len must be >= 3");
    if (n > 20) throw std::invalid_argument("enumerate_induced_cycles: subset scan requires n <= 20");
    std::vector<InducedCycle> out;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        int size = __builtin_popcountll(mask);
        if (size < min_len) continue;
        // induced subgraph is a single cycle iff 2-regular and connected
        bool two_regular = true;
        for (std::uint64_t b = mask; b && two_regular; b &= b - 1) {
            int v = __builtin_ctzll(b) + 1;
            if (__builtin_popcountll(g.neighbors(v).bits & mask) != 2) two_regular = false;
        }
        if (!two_regular) continue;
        int start = __builtin_ctzll(mask) + 1;
        std::vector<int> walk{start};
        int prev = 0, cur = start;
        do {
            std::uint64_t nb = g.neighbors(cur).bits & mask;
            if (prev) nb &= ~(1ull << (prev - 1));
            int nxt = __builtin_ctzll(nb) + 1;
            prev = cur;
            cur = nxt;
            if (cur != start) walk.push_back(cur);
        } while (cur != start);
        if (static_cast<int>(walk.size()) != size) continue;  // two or more disjoint cycles
        out.push_back(canonical_cycle(walk));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<int> min_minimal_cycle_length(const SimpleGraph& g) {
    auto cycles = enumerate_induced_cycles(g, 4);
    if (cycles.empty()) return std::nullopt;
    return cycles.front().length();
}

bool is_chordal(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n <= 2) return true;
    // maximum cardinality search, numbering n..1
    std::vector<int> num(n + 1, 0), weight(n + 1, 0);
    std::vector<int> by_num(n + 1, 0);  // by_num[i] = vertex numbered i
    std::uint64_t unnumbered = VertexSet::full(n).bits;
    for (int i = n; i >= 1; --i) {
        int best = -1, bestw = -1;
        for (int v : VertexSet(unnumbered).to_vector())
            if (weight[v] > bestw) bestw = weight[v], best = v;
        num[best] = i;
        by_num[i] = best;
        unnumbered &= ~(1ull << (best - 1));
        for (int u : VertexSet(g.neighbors(best).bits & unnumbered).to_vector()) ++weight[u];
    }
    // perfect elimination check: later neighbours of v minus the first one
    // must all be adjacent to that first one
    for (int i = 1; i <= n; ++i) {
        int v = by_num[i];
        std::uint64_t later = 0;
        for (int u : g.neighbors(v).to_vector())
            if (num[u] > i) later |= 1ull << (u - 1);
        if (!later) continue;
        int f = 0, fnum = n + 1;
        for (int u : VertexSet(later).to_vector())
            if (num[u] < fnum) fnum = num[u], f = u;
        std::uint64_t rest = later & ~(1ull << (f - 1));
        if (rest & ~g.neighbors(f).bits) return false;
    }
    return true;
}

Pattern pattern_parse(const std::string& s) {
    if (s == "gap") return Pattern::gap;
    if (s == "cricket") return Pattern::cricket;
    if (s == "diamond") return Pattern::diamond;
    if (s == "c4") return Pattern::c4;
    throw std::invalid_argument("pattern_parse: unknown pattern '" + s + "'");
}

namespace {

SimpleGraph pattern_graph(Pattern p) {
    switch (p) {
        case Pattern::gap:
            return SimpleGraph::from_edges(4, {{1, 2}, {3, 4}});
        case Pattern::cricket:
            return SimpleGraph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}});
        case Pattern::diamond:
            return SimpleGraph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
        case Pattern::c4:
            return SimpleGraph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    }
    throw std::logic_error("pattern_graph: unreachable");
}

template <typename F>
void for_each_subset_of_size(int n, int k, F&& f) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    if (k > n) return;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool detect_pattern(const SimpleGraph& g, Pattern pattern) {
    SimpleGraph pat = pattern_graph(pattern);
    int k = pat.vertex_count();
    int pat_edges = pat.edge_count();
    std::string pat_form = canonical_form(pat);
    bool found = false;
    for_each_subset_of_size(g.vertex_count(), k, [&](const std::vector<int>& idx) {
        if (found) return;
        VertexSet w;
        for (int v : idx) w.add(v);
        auto sub = induced_subgraph(g, w);
        if (sub.graph.edge_count() != pat_edges) return;
        if (canonical_form(sub.graph) == pat_form) found = true;
    });
    return found;
}

namespace {

struct CanonSearch {
    int n;
    const SimpleGraph* g;
    std::uint64_t best;      // full C(n,2)-bit code, bits in colex pair order, first pair most significant
    int total_bits;
    std::vector<int> chosen;  // chosen[pos] = original vertex (1-based)

    void rec(int pos, std::uint64_t code, int bits) {
        if (pos == n) {
            if (code < best) best = code;
            return;
        }
        std::uint64_t used = 0;
        for (int i = 0; i < pos; ++i) used |= 1ull << (chosen[i] - 1);
        for (int v = 1; v <= n; ++v) {
            if ((used >> (v - 1)) & 1ull) continue;
            std::uint64_t ext = code;
            for (int i = 0; i < pos; ++i) ext = (ext << 1) | (g->has_edge(chosen[i], v) ? 1ull : 0ull);
            int ext_bits = bits + pos;
            if (ext > (best >> (total_bits - ext_bits))) continue;
            chosen[pos] = v;
            rec(pos + 1, ext, ext_bits);
        }
    }
};

}  // namespace

std::string canonical_form(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n > 9) throw std::invalid_argument("canonical_form: brute-force canonicalization requires n <= 9");
    int total_bits = n * (n - 1) / 2;
    CanonSearch s;
    s.n = n;
    s.g = &g;
    s.total_bits = total_bits;
    s.chosen.assign(n, 0);
    // identity permutation seeds the bound
    std::uint64_t id_code = 0;
    for (int k = 2; k <= n; ++k)
        for (int i = 1; i < k; ++i) id_code = (id_code << 1) | (g.has_edge(i, k) ? 1ull : 0ull);
    s.best = id_code;
    if (n > 0) s.rec(0, 0, 0);
    std::string out;
    out.push_back(static_cast<char>(n));
    int nbytes = (total_bits + 7) / 8;
    for (int b = 0; b < nbytes; ++b) {
        int shift = total_bits - 8 * (b + 1);
        std::uint64_t byte = shift >= 0 ? (s.best >> shift) : (s.best << -shift);
        out.push_back(static_cast<char>(byte & 0xff));
    }
    return out;
}

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

SimpleGraph graph_from_canonical_form(const std::string& form) {
    if (form.empty()) throw std::invalid_argument("graph_from_canonical_form: empty string");
    int n = static_cast<unsigned char>(form[0]);
    int total_bits = n * (n - 1) / 2;
    if (static_cast<int>(form.size()) != 1 + (total_bits + 7) / 8)
        throw std::invalid_argument("graph_from_canonical_form: bad length");
    SimpleGraph g(n);
    int bit = 0;
    for (int k = 2; k <= n; ++k)
        for (int i = 1; i < k; ++i, ++bit) {
            int byte = bit / 8, off = bit % 8;
            if ((static_cast<unsigned char>(form[1 + byte]) >> (7 - off)) & 1) g.add_edge(i, k);
        }
    return g;
}

SimpleGraph apply_permutation(const SimpleGraph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("apply_permutation: permutation size mismatch");
    SimpleGraph h(n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u - 1], perm[v - 1]);
    return h;
}

}  // namespace edgeres
