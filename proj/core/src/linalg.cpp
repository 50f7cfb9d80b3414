#include "edgeres/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace edgeres {

namespace {

std::vector<std::vector<std::uint64_t>> to_bit_rows(const SparseIntMatrix& m) {
    size_t words = (static_cast<size_t>(m.cols) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(static_cast<size_t>(m.rows),
                                                 std::vector<std::uint64_t>(words, 0));
    for (int c = 0; c < m.cols; ++c)
        for (auto [r, v] : m.entries[c])
            if (v & 1) rows[r][c / 64] ^= 1ull << (c % 64);
    return rows;
}

int first_set_bit(const std::vector<std::uint64_t>& row) {
    for (size_t w = 0; w < row.size(); ++w)
        if (row[w]) return static_cast<int>(w * 64 + __builtin_ctzll(row[w]));
    return -1;
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

int bareiss_rank(std::vector<std::vector<mpz_class>>& a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int steps = std::min(rows, cols);
    mpz_class prev = 1;
    for (int k = 0; k < steps; ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < rows && pi < 0; ++i)
            for (int j = k; j < cols; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) return k;
        std::swap(a[k], a[pi]);
        if (pj != k)
            for (int i = 0; i < rows; ++i) std::swap(a[i][k], a[i][pj]);
        for (int i = k + 1; i < rows; ++i) {
            for (int j = k + 1; j < cols; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return steps;
}

// Rows as sorted (col, value) lists.
using SparseRow = std::vector<std::pair<int, long long>>;

// While every entry stays below this bound, one elimination step on a +-1
// pivot cannot overflow int64 (products <= 2^40, sums <= 2^41).
constexpr long long kPhase1Bound = 1ll << 20;

SparseRow add_scaled(const SparseRow& a, long long s, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            long long v = s * b[j].second;
            if (v != 0) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            long long v = a[i].second + s * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

// Exact rank over Q of an integer matrix in sparse row form: repeatedly
// eliminate on +-1 pivots (keeps everything integral with no division);
// hand whatever remains to Bareiss over mpz.
int sparse_rational_rank(std::vector<SparseRow> rows, int ncols) {
    int rank = 0;
    while (true) {
        // column occupancy among live rows, and the current magnitude bound
        std::map<int, int> col_count;
        long long max_abs = 0;
        for (const auto& r : rows)
            for (auto [c, v] : r) {
                ++col_count[c];
                max_abs = std::max(max_abs, std::llabs(v));
            }
        if (max_abs > kPhase1Bound) break;
        // pick a +-1 pivot minimizing fill estimate (nnz_row-1)*(nnz_col-1)
        int best_row = -1, best_col = -1;
        long long best_score = -1;
        for (size_t i = 0; i < rows.size() && best_score != 0; ++i) {
            for (auto [c, v] : rows[i]) {
                if (v != 1 && v != -1) continue;
                long long score =
                    (static_cast<long long>(rows[i].size()) - 1) * (col_count[c] - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    best_row = static_cast<int>(i);
                    best_col = c;
                }
                if (best_score == 0) break;
            }
        }
        if (best_row < 0) break;
        SparseRow pivot = std::move(rows[best_row]);
        rows[best_row] = std::move(rows.back());
        rows.pop_back();
        long long pv = 0;
        for (auto [c, v] : pivot)
            if (c == best_col) pv = v;
        std::vector<SparseRow> next;
        next.reserve(rows.size());
        for (auto& r : rows) {
            long long a = 0;
            for (auto [c, v] : r)
                if (c == best_col) a = v;
            if (a == 0) {
                next.push_back(std::move(r));
            } else {
                SparseRow reduced = add_scaled(r, -a * pv, pivot);  // pv in {1,-1}
                if (!reduced.empty()) next.push_back(std::move(reduced));
            }
        }
        rows = std::move(next);
        ++rank;
    }
    if (rows.empty()) return rank;
    // dense Bareiss closer on the remaining rows
    std::map<int, int> col_index;
    for (const auto& r : rows)
        for (auto [c, v] : r) col_index.emplace(c, 0);
    int k = 0;
    for (auto& [c, idx] : col_index) idx = k++;
    std::vector<std::vector<mpz_class>> dense(rows.size(), std::vector<mpz_class>(col_index.size(), 0));
    for (size_t i = 0; i < rows.size(); ++i)
        for (auto [c, v] : rows[i]) dense[i][static_cast<size_t>(col_index[c])] = mpz_class(static_cast<long>(v));
    (void)ncols;
    return rank + bareiss_rank(dense);
}

std::vector<SparseRow> to_sparse_rows(const SparseIntMatrix& m) {
    std::vector<SparseRow> rows(static_cast<size_t>(m.rows));
    for (int c = 0; c < m.cols; ++c)
        for (auto [r, v] : m.entries[c])
            if (v != 0) rows[r].emplace_back(c, v);
    for (auto& r : rows) std::sort(r.begin(), r.end());
    std::vector<SparseRow> live;
    live.reserve(rows.size());
    for (auto& r : rows)
        if (!r.empty()) live.push_back(std::move(r));
    return live;
}

}  // namespace

int rank_gf2(const SparseIntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    auto rows = to_bit_rows(m);
    std::vector<int> pivot_of_col(static_cast<size_t>(m.cols), -1);
    std::vector<std::vector<std::uint64_t>> pivots;
    int rank = 0;
    for (auto& row : rows) {
        int c = first_set_bit(row);
        while (c >= 0 && pivot_of_col[c] >= 0) {
            const auto& p = pivots[pivot_of_col[c]];
            for (size_t w = c / 64; w < row.size(); ++w) row[w] ^= p[w];
            c = first_set_bit(row);
        }
        if (c >= 0) {
            pivot_of_col[c] = static_cast<int>(pivots.size());
            pivots.push_back(std::move(row));
            ++rank;
        }
    }
    return rank;
}

int rank_gfp(const SparseIntMatrix& m, std::uint32_t p) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (p == 2) return rank_gf2(m);
    std::vector<std::vector<std::uint32_t>> rows(static_cast<size_t>(m.rows),
                                                 std::vector<std::uint32_t>(static_cast<size_t>(m.cols), 0));
    for (int c = 0; c < m.cols; ++c)
        for (auto [r, v] : m.entries[c]) {
            long long vv = v % static_cast<long long>(p);
            if (vv < 0) vv += p;
            rows[r][c] = static_cast<std::uint32_t>(vv);
        }
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (rows[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        std::uint64_t inv = pow_mod(rows[rank][c], p - 2, p);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (!rows[r][c]) continue;
            std::uint64_t f = rows[r][c] * inv % p;
            for (int j = c; j < m.cols; ++j)
                rows[r][j] = static_cast<std::uint32_t>(
                    (rows[r][j] + (p - static_cast<std::uint32_t>(f * rows[rank][j] % p))) % p);
        }
        ++rank;
    }
    return rank;
}

int rank_rational(const SparseIntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return sparse_rational_rank(to_sparse_rows(m), m.cols);
}

int rank(const SparseIntMatrix& m, const FieldSpec& f) {
    if (f.is_rational()) return rank_rational(m);
    return rank_gfp(m, f.p);
}

bool in_column_span(const SparseIntMatrix& m, const std::vector<std::pair<int, int>>& target,
                    const FieldSpec& f) {
    SparseIntMatrix aug(m.rows, m.cols + 1);
    aug.entries = m.entries;
    aug.entries.emplace_back();
    for (auto [r, v] : target)
        if (v != 0) aug.entries[m.cols].emplace_back(r, v);
    std::sort(aug.entries[m.cols].begin(), aug.entries[m.cols].end());
    bool target_zero = aug.entries[m.cols].empty();
    if (!f.is_rational()) {
        // could still vanish mod p
        bool all_div = true;
        for (auto [r, v] : aug.entries[m.cols])
            if (v % static_cast<int>(f.p) != 0) all_div = false;
        target_zero = target_zero || all_div;
    }
    if (target_zero) return true;
    return rank(aug, f) == rank(m, f);
}

}  // namespace edgeres
