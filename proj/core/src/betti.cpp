#include "edgeres/betti.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

namespace edgeres {

std::string BettiTable::to_tsv() const {
    std::ostringstream out;
    for (const auto& [ij, v] : entries) out << ij.first << "\t" << ij.second << "\t" << v << "\n";
    return out.str();
}

nlohmann::json betti_to_json(const BettiTable& t) {
    nlohmann::json j;
    j["d"] = t.d;
    if (t.nonlinear_only) j["nonlinear_only"] = true;
    auto arr = nlohmann::json::array();
    for (const auto& [ij, v] : t.entries) arr.push_back({ij.first, ij.second, v});
    j["entries"] = arr;
    return j;
}

nlohmann::json stats_to_json(const ResolutionStats& s) {
    nlohmann::json j;
    if (s.index)
        j["index"] = *s.index;
    else
        j["index"] = "infinity";
    j["pd"] = s.pd;
    j["reg"] = s.reg;
    j["linear"] = s.linear;
    j["almost_maximal"] = s.almost_maximal;
    return j;
}

namespace {

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// contribution of the induced subcomplex on mask to the table
void accumulate_subset(const SimplicialComplex& c, std::uint64_t mask, const FieldSpec& f,
                       int kmin_wanted, BettiTable& local) {
    int j = __builtin_popcountll(mask);
    // degree k contributes at i = j-2-k >= 0, so k <= j-2
    int ktop = j - 2;
    if (ktop < kmin_wanted) return;
    // cone detection: a vertex of mask avoided by every non-face inside mask
    std::uint64_t covered = 0;
    for (auto m : c.nonfaces)
        if ((m & ~mask) == 0) covered |= m;
    if (covered != mask) return;  // cone (or empty): reduced homology vanishes
    FaceTable ft = enumerate_faces_within(c, mask);
    int dmin = std::max(kmin_wanted, -1);
    auto dims = homology_dims(ft, f, dmin);
    for (int k = dmin; k < dmin + static_cast<int>(dims.size()); ++k) {
        if (k > ktop) break;
        long long h = dims[static_cast<size_t>(k - dmin)];
        if (h > 0) local.add(j - 2 - k, j, h);
    }
}

}  // namespace

BettiTable betti_from_complex(const SimplicialComplex& c, int gen_degree, const HochsterOptions& opt) {
    if (c.n > 22) throw std::invalid_argument("betti_from_complex: ground set guard (n <= 22) exceeded");
    BettiTable out;
    out.d = gen_degree;
    out.nonlinear_only = opt.nonlinear_only;
    int kmin = opt.nonlinear_only ? gen_degree - 1 : -1;
    std::uint64_t total = c.n >= 64 ? 0 : (1ull << c.n);
    int nthreads = resolve_threads(opt.threads);
    if (nthreads <= 1 || total < 64) {
        for (std::uint64_t mask = 1; mask < total; ++mask) accumulate_subset(c, mask, opt.field, kmin, out);
        return out;
    }
    std::vector<BettiTable> locals(static_cast<size_t>(nthreads));
    std::vector<std::thread> pool;
    for (int tix = 0; tix < nthreads; ++tix) {
        pool.emplace_back([&, tix] {
            BettiTable& local = locals[static_cast<size_t>(tix)];
            // strided masks; the merge is a plain sum, so chunking cannot
            // change the result
            for (std::uint64_t mask = 1 + static_cast<std::uint64_t>(tix); mask < total;
                 mask += static_cast<std::uint64_t>(nthreads))
                accumulate_subset(c, mask, opt.field, kmin, local);
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& local : locals)
        for (const auto& [ij, v] : local.entries) out.add(ij.first, ij.second, v);
    return out;
}

BettiTable hochster_betti(const SimpleGraph& g, const HochsterOptions& opt) {
    return betti_from_complex(independence_complex(g), 2, opt);
}

BettiTable betti_squarefree(const MonomialIdeal& ideal, const HochsterOptions& opt) {
    if (!ideal.is_squarefree()) throw std::invalid_argument("betti_squarefree: non-squarefree generator");
    if (static_cast<int>(ideal.vars.size()) > 22)
        throw std::invalid_argument("betti_squarefree: variable count guard (<= 22) exceeded");
    if (ideal.is_zero()) return BettiTable{0, opt.nonlinear_only, {}};
    if (ideal.contains_unit()) {
        BettiTable t;
        t.d = 0;
        t.nonlinear_only = opt.nonlinear_only;
        t.add(0, 0, 1);
        return t;
    }
    return betti_from_complex(stanley_reisner_complex(ideal), ideal.min_degree(), opt);
}

BettiTable betti_of_monomial_ideal(const MonomialIdeal& ideal, const HochsterOptions& opt) {
    if (ideal.is_zero()) return BettiTable{0, opt.nonlinear_only, {}};
    if (ideal.contains_unit()) {
        BettiTable t;
        t.d = 0;
        t.nonlinear_only = opt.nonlinear_only;
        t.add(0, 0, 1);
        return t;
    }
    Polarization pol = polarize(ideal);
    return betti_squarefree(pol.ideal, opt);
}

BettiTable betti_via_taylor(const MonomialIdeal& ideal, const FieldSpec& f) {
    int r = static_cast<int>(ideal.gens.size());
    if (r > 14) throw std::invalid_argument("betti_via_taylor: generator count guard (<= 14) exceeded");
    BettiTable out;
    out.d = ideal.min_degree();
    if (r == 0) return out;
    if (ideal.contains_unit()) {
        out.d = 0;
        out.add(0, 0, 1);
        return out;
    }
    std::uint32_t total = 1u << r;
    // lcm degree per subset of generators
    std::vector<int> lcm_deg(total, 0);
    std::vector<Monomial> lcm_mon(total, Monomial::one(static_cast<int>(ideal.vars.size())));
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        int g = __builtin_ctz(mask);
        std::uint32_t rest = mask & (mask - 1);
        lcm_mon[mask] = Monomial::lcm(lcm_mon[rest], ideal.gens[static_cast<size_t>(g)]);
        lcm_deg[mask] = lcm_mon[mask].degree();
    }
    // group subsets by (cardinality, lcm degree)
    std::map<std::pair<int, int>, std::vector<std::uint32_t>> groups;
    for (std::uint32_t mask = 0; mask < total; ++mask)
        groups[{__builtin_popcount(mask), lcm_deg[mask]}].push_back(mask);

    // graded block of the Taylor differential from size-k grade-j subsets
    auto block_rank = [&](int k, int j) -> std::pair<int, int> {  // (cols, rank)
        auto itc = groups.find({k, j});
        if (itc == groups.end() || itc->second.empty()) return {0, 0};
        const auto& cols = itc->second;
        auto itr = groups.find({k - 1, j});
        std::vector<std::uint32_t> rows = itr == groups.end() ? std::vector<std::uint32_t>{} : itr->second;
        SparseIntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t ci = 0; ci < cols.size(); ++ci) {
            std::uint32_t mask = cols[ci];
            int pos = 0;
            for (std::uint32_t b = mask; b; b &= b - 1, ++pos) {
                std::uint32_t sub = mask & ~(b & -b);
                if (lcm_deg[sub] != j) continue;
                auto it = std::lower_bound(rows.begin(), rows.end(), sub);
                m.set(static_cast<int>(it - rows.begin()), static_cast<int>(ci), pos % 2 == 0 ? 1 : -1);
            }
        }
        return {static_cast<int>(cols.size()), rank(m, f)};
    };

    std::map<std::pair<int, int>, int> rank_cache;
    auto rank_at = [&](int k, int j) {
        auto it = rank_cache.find({k, j});
        if (it != rank_cache.end()) return it->second;
        int rk = block_rank(k, j).second;
        rank_cache[{k, j}] = rk;
        return rk;
    };

    for (const auto& [key, cols] : groups) {
        auto [k, j] = key;
        if (k < 1) continue;
        long long tor = static_cast<long long>(cols.size()) - rank_at(k, j) - rank_at(k + 1, j);
        if (tor > 0) out.add(k - 1, j, tor);  // Tor_k(S/I, K)_j = beta_{k-1,j}(I)
    }
    return out;
}

ResolutionStats resolution_stats(const BettiTable& t) {
    if (t.entries.empty()) throw std::invalid_argument("resolution_stats: empty Betti table");
    if (t.nonlinear_only)
        throw std::invalid_argument("resolution_stats: needs a full table, not a nonlinear-only one");
    ResolutionStats s;
    s.pd = 0;
    s.reg = t.d;
    std::optional<int> idx;
    for (const auto& [ij, v] : t.entries) {
        auto [i, j] = ij;
        s.pd = std::max(s.pd, i);
        s.reg = std::max(s.reg, j - i);
        if (j > i + t.d && (!idx || i < *idx)) idx = i;
    }
    s.index = idx;
    s.linear = !idx.has_value();
    s.almost_maximal = idx.has_value() && *idx == s.pd - 1;
    return s;
}

std::optional<int> index_via_cycles(const SimpleGraph& g) {
    auto len = min_minimal_cycle_length(complement(g));
    if (!len) return std::nullopt;
    return *len - 3;
}

bool is_almost_maximal(const SimpleGraph& g, const FieldSpec& f) {
    BettiTable t = hochster_betti(g, HochsterOptions{f, false, 0});
    if (t.entries.empty()) return false;  // zero ideal
    return resolution_stats(t).almost_maximal;
}

int reg_of_table(const BettiTable& t) {
    int reg = t.d;
    for (const auto& [ij, v] : t.entries) reg = std::max(reg, ij.second - ij.first);
    return reg;
}

std::optional<int> index_of_table(const BettiTable& t) {
    std::optional<int> idx;
    for (const auto& [ij, v] : t.entries)
        if (ij.second > ij.first + t.d && (!idx || ij.first < *idx)) idx = ij.first;
    return idx;
}

}  // namespace edgeres
