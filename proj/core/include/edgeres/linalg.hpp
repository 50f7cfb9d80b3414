#ifndef EDGERES_LINALG_HPP
#define EDGERES_LINALG_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "edgeres/field.hpp"

namespace edgeres {

// Column-major sparse matrix with small integer entries (boundary maps have
// entries +-1).  Entry lists are sorted by row and carry no zeros.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, int>>> entries;  // entries[c] = {(row, value)}

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(c)) {}

    void set(int r, int c, int v) { entries[c].emplace_back(r, v); }
    long long nnz() const {
        long long t = 0;
        for (const auto& col : entries) t += static_cast<long long>(col.size());
        return t;
    }
};

int rank_gf2(const SparseIntMatrix& m);
int rank_gfp(const SparseIntMatrix& m, std::uint32_t p);

// Exact rank over Q: sparse integer elimination on unit pivots, with a
// fraction-free (Bareiss) closer over arbitrary-precision integers for
// whatever dense core remains.
int rank_rational(const SparseIntMatrix& m);

int rank(const SparseIntMatrix& m, const FieldSpec& f);

// Is the target vector in the column span of m over f?
bool in_column_span(const SparseIntMatrix& m, const std::vector<std::pair<int, int>>& target,
                    const FieldSpec& f);

}  // namespace edgeres

#endif
