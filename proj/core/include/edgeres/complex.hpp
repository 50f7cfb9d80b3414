#ifndef EDGERES_COMPLEX_HPP
#define EDGERES_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "edgeres/field.hpp"
#include "edgeres/graph.hpp"
#include "edgeres/linalg.hpp"
#include "edgeres/monomial.hpp"

namespace edgeres {

// Abstract simplicial complex on ground set {1..n}, presented by its minimal
// non-faces.  F is a face iff no non-face is contained in F; the empty set is
// always a face.
struct SimplicialComplex {
    int n = 0;
    std::vector<std::uint64_t> nonfaces;  // pairwise incomparable, each nonempty, sorted

    static SimplicialComplex from_nonfaces(int n, std::vector<std::uint64_t> nf);
    bool is_face(std::uint64_t f) const;
};

SimplicialComplex independence_complex(const SimpleGraph& g);
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

nlohmann::json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const nlohmann::json& j);

// Faces grouped by dimension: faces_by_dim[d+1] holds the d-faces as masks,
// sorted lexicographically by vertex list.  Grows one dimension at a time;
// total face count is guarded by 2^22.
struct FaceTable {
    std::vector<std::vector<std::uint64_t>> faces_by_dim;
    int top_dim() const { return static_cast<int>(faces_by_dim.size()) - 2; }
    long long face_count(int d) const {
        if (d + 1 < 0 || d + 1 >= static_cast<int>(faces_by_dim.size())) return 0;
        return static_cast<long long>(faces_by_dim[static_cast<size_t>(d + 1)].size());
    }
};

FaceTable enumerate_faces(const SimplicialComplex& c);
// Faces of the induced subcomplex on w (masks stay in the ambient labeling).
FaceTable enumerate_faces_within(const SimplicialComplex& c, std::uint64_t w);

// Matrix of the differential from d-faces to (d-1)-faces, alternating signs,
// with the d = 0 column mapping each vertex to the empty face.
SparseIntMatrix boundary_matrix(const FaceTable& ft, int d);
SparseIntMatrix boundary_matrix(const SimplicialComplex& c, int d);

struct HomologyProfile {
    std::map<int, long long> dims;  // degree -> dim of reduced homology; zero entries kept for -1..top
    long long dim(int d) const {
        auto it = dims.find(d);
        return it == dims.end() ? 0 : it->second;
    }
};

HomologyProfile reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& f);

// dims for degrees dmin..top of the given face table.  Over the rationals,
// vanishing over GF(2) certifies vanishing (universal coefficients); only the
// surviving degrees get the exact fraction-free treatment.
std::vector<long long> homology_dims(const FaceTable& ft, const FieldSpec& f, int dmin);

// Formal linear combination of oriented faces.  Brackets given in arbitrary
// vertex order are normalized to ascending order with the permutation sign.
struct Chain {
    int degree = 0;
    std::map<std::uint64_t, long long> coeffs;  // only nonzero

    void add_bracket(const std::vector<int>& vertices, long long coeff);
};

enum class SpecialChainKind { cycle, dipyramid };

// The cycle kernel T(C) in degree 1, or the dipyramid kernel T(D) in
// degree 2 for waist C and apexes (a,b).  Every bracket must be a face of
// the ambient complex.
Chain special_chain(const SimplicialComplex& c, SpecialChainKind kind, const InducedCycle& cycle,
                    std::optional<std::pair<int, int>> apexes = std::nullopt);

// The boundary of z (integer coefficients).
Chain boundary_of(const Chain& z);

// Is the cycle z a boundary in c over f?  Requires dz = 0.
bool chain_is_boundary(const SimplicialComplex& c, const Chain& z, const FieldSpec& f);

}  // namespace edgeres

#endif
