#include "edgeres/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace edgeres {

namespace {

constexpr long long kFaceGuard = 1ll << 22;

// lexicographic order on equal-size vertex lists: the mask holding the
// lowest differing bit comes first
bool face_lex_less(std::uint64_t a, std::uint64_t b) {
    if (a == b) return false;
    std::uint64_t low = (a ^ b) & -(a ^ b);
    return a & low;
}

std::vector<int> mask_vertices(std::uint64_t m) { return VertexSet(m).to_vector(); }

}  // namespace

SimplicialComplex SimplicialComplex::from_nonfaces(int n, std::vector<std::uint64_t> nf) {
    if (n < 0 || n > 64) throw std::invalid_argument("SimplicialComplex: ground set size out of range");
    std::uint64_t full = VertexSet::full(n).bits;
    for (auto m : nf) {
        if (m & ~full) throw std::invalid_argument("SimplicialComplex: non-face outside ground set");
        if (m == 0) throw std::invalid_argument("SimplicialComplex: empty non-face");
    }
    std::sort(nf.begin(), nf.end());
    nf.erase(std::unique(nf.begin(), nf.end()), nf.end());
    std::vector<std::uint64_t> keep;
    for (auto m : nf) {
        bool dominated = false;
        for (auto k : keep)
            if ((k & ~m) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(m);
    }
    return SimplicialComplex{n, std::move(keep)};
}

bool SimplicialComplex::is_face(std::uint64_t f) const {
    for (auto m : nonfaces)
        if ((m & ~f) == 0) return false;
    return true;
}

SimplicialComplex independence_complex(const SimpleGraph& g) {
    std::vector<std::uint64_t> nf;
    for (auto [u, v] : g.edges()) nf.push_back((1ull << (u - 1)) | (1ull << (v - 1)));
    return SimplicialComplex::from_nonfaces(g.vertex_count(), std::move(nf));
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree())
        throw std::invalid_argument("stanley_reisner_complex: ideal has a non-squarefree generator");
    std::vector<std::uint64_t> nf;
    for (const auto& m : ideal.gens) {
        std::uint64_t mask = 0;
        for (int v : m.support()) mask |= 1ull << v;
        nf.push_back(mask);
    }
    return SimplicialComplex::from_nonfaces(static_cast<int>(ideal.vars.size()), std::move(nf));
}

nlohmann::json complex_to_json(const SimplicialComplex& c) {
    nlohmann::json j;
    j["n"] = c.n;
    auto arr = nlohmann::json::array();
    for (auto m : c.nonfaces) arr.push_back(mask_vertices(m));
    j["nonfaces"] = arr;
    return j;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::uint64_t> nf;
    for (const auto& f : j.at("nonfaces")) {
        std::uint64_t m = 0;
        for (int v : f.get<std::vector<int>>()) {
            if (v < 1 || v > n) throw std::invalid_argument("complex json: vertex out of range");
            m |= 1ull << (v - 1);
        }
        nf.push_back(m);
    }
    return SimplicialComplex::from_nonfaces(n, std::move(nf));
}

FaceTable enumerate_faces_within(const SimplicialComplex& c, std::uint64_t w) {
    // non-faces fully inside w are the only ones that matter
    std::vector<std::uint64_t> nf;
    for (auto m : c.nonfaces)
        if ((m & ~w) == 0) nf.push_back(m);
    // per-vertex lists of the relevant non-faces
    std::vector<std::vector<std::uint64_t>> by_vertex(64);
    for (auto m : nf)
        for (int v : mask_vertices(m)) by_vertex[static_cast<size_t>(v - 1)].push_back(m);

    FaceTable ft;
    ft.faces_by_dim.push_back({0});  // the empty face
    long long total = 1;
    // vertices of w that are themselves faces
    std::vector<std::uint64_t> cur;
    for (int v : mask_vertices(w)) {
        std::uint64_t m = 1ull << (v - 1);
        if (c.is_face(m)) cur.push_back(m);
    }
    while (!cur.empty()) {
        total += static_cast<long long>(cur.size());
        if (total > kFaceGuard) throw std::runtime_error("enumerate_faces: face-count guard (2^22) exceeded");
        std::sort(cur.begin(), cur.end(), face_lex_less);
        ft.faces_by_dim.push_back(cur);
        std::vector<std::uint64_t> next;
        for (auto f : cur) {
            int top = 63 - __builtin_clzll(f);
            std::uint64_t candidates = w & ~((top + 1 >= 64) ? ~0ull : ((1ull << (top + 1)) - 1));
            for (int v : mask_vertices(candidates)) {
                std::uint64_t f2 = f | (1ull << (v - 1));
                bool ok = true;
                for (auto m : by_vertex[static_cast<size_t>(v - 1)])
                    if ((m & ~f2) == 0) {
                        ok = false;
                        break;
                    }
                if (ok) next.push_back(f2);
            }
        }
        cur = std::move(next);
    }
    return ft;
}

FaceTable enumerate_faces(const SimplicialComplex& c) {
    return enumerate_faces_within(c, VertexSet::full(c.n).bits);
}

SparseIntMatrix boundary_matrix(const FaceTable& ft, int d) {
    if (d < -1 || d > ft.top_dim())
        throw std::invalid_argument("boundary_matrix: dimension out of range");
    if (d == -1) return SparseIntMatrix(0, 1);  // the empty face maps to nothing
    const auto& doms = ft.faces_by_dim[static_cast<size_t>(d + 1)];
    const auto& cods = ft.faces_by_dim[static_cast<size_t>(d)];
    SparseIntMatrix m(static_cast<int>(cods.size()), static_cast<int>(doms.size()));
    auto row_of = [&](std::uint64_t f) {
        auto it = std::lower_bound(cods.begin(), cods.end(), f, face_lex_less);
        return static_cast<int>(it - cods.begin());
    };
    for (size_t c = 0; c < doms.size(); ++c) {
        auto verts = mask_vertices(doms[c]);
        int sign = 1;
        for (int j = 0; j <= d; ++j) {
            std::uint64_t sub = doms[c] & ~(1ull << (verts[static_cast<size_t>(j)] - 1));
            m.set(row_of(sub), static_cast<int>(c), sign);
            sign = -sign;
        }
        std::sort(m.entries[c].begin(), m.entries[c].end());
    }
    return m;
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& c, int d) {
    return boundary_matrix(enumerate_faces(c), d);
}

std::vector<long long> homology_dims(const FaceTable& ft, const FieldSpec& f, int dmin) {
    int top = ft.top_dim();
    std::vector<long long> dims;
    if (dmin > top) return dims;
    dims.assign(static_cast<size_t>(top - dmin + 1), 0);
    // ranks r[k] of the boundary map in dimension k for k = dmin .. top (+0 above)
    std::vector<int> r(static_cast<size_t>(top - dmin + 2), 0);
    auto rank_at = [&](int k, auto rank_fn) {
        if (k > top) return 0;
        return rank_fn(boundary_matrix(ft, k));
    };
    if (f.is_rational()) {
        for (int k = dmin; k <= top + 1; ++k)
            r[static_cast<size_t>(k - dmin)] = rank_at(k, [](const SparseIntMatrix& m) { return rank_gf2(m); });
        std::map<int, int> exact;  // dimension -> exact rational rank
        auto exact_rank = [&](int k) {
            if (k > top) return 0;
            auto it = exact.find(k);
            if (it != exact.end()) return it->second;
            int v = rank_rational(boundary_matrix(ft, k));
            exact.emplace(k, v);
            return v;
        };
        for (int k = dmin; k <= top; ++k) {
            long long h2 = ft.face_count(k) - r[static_cast<size_t>(k - dmin)] - r[static_cast<size_t>(k + 1 - dmin)];
            if (h2 == 0) continue;  // zero over GF(2) forces zero over Q
            dims[static_cast<size_t>(k - dmin)] = ft.face_count(k) - exact_rank(k) - exact_rank(k + 1);
        }
    } else {
        for (int k = dmin; k <= top + 1; ++k)
            r[static_cast<size_t>(k - dmin)] =
                rank_at(k, [&](const SparseIntMatrix& m) { return rank_gfp(m, f.p); });
        for (int k = dmin; k <= top; ++k)
            dims[static_cast<size_t>(k - dmin)] =
                ft.face_count(k) - r[static_cast<size_t>(k - dmin)] - r[static_cast<size_t>(k + 1 - dmin)];
    }
    return dims;
}

HomologyProfile reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& f) {
    FaceTable ft = enumerate_faces(c);
    auto dims = homology_dims(ft, f, -1);
    HomologyProfile p;
    for (int k = -1; k <= ft.top_dim(); ++k) p.dims[k] = dims[static_cast<size_t>(k + 1)];
    return p;
}

void Chain::add_bracket(const std::vector<int>& vertices, long long coeff) {
    std::vector<int> v = vertices;
    // sign of the sorting permutation via bubble count
    int sign = 1;
    for (size_t i = 0; i + 1 < v.size(); ++i)
        for (size_t j = 0; j + 1 < v.size() - i; ++j)
            if (v[j] > v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                sign = -sign;
            }
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == v[i + 1]) throw std::invalid_argument("Chain: repeated vertex in bracket");
    std::uint64_t mask = 0;
    for (int x : v) mask |= 1ull << (x - 1);
    long long& slot = coeffs[mask];
    slot += sign * coeff;
    if (slot == 0) coeffs.erase(mask);
}

Chain special_chain(const SimplicialComplex& c, SpecialChainKind kind, const InducedCycle& cycle,
                    std::optional<std::pair<int, int>> apexes) {
    int r = cycle.length();
    const auto& u = cycle.vertices;
    auto require_face = [&](std::vector<int> verts) {
        std::uint64_t mask = 0;
        for (int x : verts) mask |= 1ull << (x - 1);
        if (!c.is_face(mask)) throw std::invalid_argument("special_chain: bracket is not a face of the complex");
    };
    Chain z;
    if (kind == SpecialChainKind::cycle) {
        z.degree = 1;
        for (int i = 0; i + 1 < r; ++i) {
            require_face({u[static_cast<size_t>(i)], u[static_cast<size_t>(i + 1)]});
            z.add_bracket({u[static_cast<size_t>(i)], u[static_cast<size_t>(i + 1)]}, 1);
        }
        require_face({u.front(), u.back()});
        z.add_bracket({u.front(), u.back()}, -1);
        return z;
    }
    if (!apexes) throw std::invalid_argument("special_chain: dipyramid needs two apexes");
    auto [a, b] = *apexes;
    z.degree = 2;
    for (int i = 0; i + 1 < r; ++i) {
        require_face({a, u[static_cast<size_t>(i)], u[static_cast<size_t>(i + 1)]});
        require_face({b, u[static_cast<size_t>(i)], u[static_cast<size_t>(i + 1)]});
        z.add_bracket({a, u[static_cast<size_t>(i)], u[static_cast<size_t>(i + 1)]}, 1);
        z.add_bracket({b, u[static_cast<size_t>(i)], u[static_cast<size_t>(i + 1)]}, -1);
    }
    require_face({a, u.front(), u.back()});
    require_face({b, u.front(), u.back()});
    z.add_bracket({a, u.front(), u.back()}, -1);
    z.add_bracket({b, u.front(), u.back()}, 1);
    return z;
}

Chain boundary_of(const Chain& z) {
    Chain out;
    out.degree = z.degree - 1;
    for (const auto& [mask, coeff] : z.coeffs) {
        auto verts = mask_vertices(mask);
        int sign = 1;
        for (size_t j = 0; j < verts.size(); ++j) {
            std::vector<int> sub;
            for (size_t i = 0; i < verts.size(); ++i)
                if (i != j) sub.push_back(verts[i]);
            if (!sub.empty()) {
                std::uint64_t m = 0;
                for (int x : sub) m |= 1ull << (x - 1);
                long long& slot = out.coeffs[m];
                slot += sign * coeff;
                if (slot == 0) out.coeffs.erase(m);
            } else {
                long long& slot = out.coeffs[0];
                slot += sign * coeff;
                if (slot == 0) out.coeffs.erase(0);
            }
            sign = -sign;
        }
    }
    return out;
}

bool chain_is_boundary(const SimplicialComplex& c, const Chain& z, const FieldSpec& f) {
    FaceTable ft = enumerate_faces(c);
    int d = z.degree;
    if (d < -1) throw std::invalid_argument("chain_is_boundary: bad degree");
    for (const auto& [mask, coeff] : z.coeffs) {
        if (!c.is_face(mask) || __builtin_popcountll(mask) != d + 1)
            throw std::invalid_argument("chain_is_boundary: chain is not supported on d-faces of the complex");
    }
    // z must be a cycle
    Chain dz = boundary_of(z);
    bool dz_zero = dz.coeffs.empty();
    if (!dz_zero && !f.is_rational()) {
        dz_zero = std::all_of(dz.coeffs.begin(), dz.coeffs.end(), [&](const auto& kv) {
            return kv.second % static_cast<long long>(f.p) == 0;
        });
    }
    if (!dz_zero) throw std::invalid_argument("chain_is_boundary: input is not a cycle");
    if (d >= ft.top_dim()) {
        // no (d+1)-faces: only the zero chain is a boundary
        bool zero = z.coeffs.empty();
        if (!zero && !f.is_rational())
            zero = std::all_of(z.coeffs.begin(), z.coeffs.end(), [&](const auto& kv) {
                return kv.second % static_cast<long long>(f.p) == 0;
            });
        return zero;
    }
    SparseIntMatrix m = boundary_matrix(ft, d + 1);
    const auto& dfaces = ft.faces_by_dim[static_cast<size_t>(d + 1)];
    std::vector<std::pair<int, int>> target;
    for (const auto& [mask, coeff] : z.coeffs) {
        auto it = std::lower_bound(dfaces.begin(), dfaces.end(), mask, face_lex_less);
        target.emplace_back(static_cast<int>(it - dfaces.begin()), static_cast<int>(coeff));
    }
    std::sort(target.begin(), target.end());
    return in_column_span(m, target, f);
}

}  // namespace edgeres
