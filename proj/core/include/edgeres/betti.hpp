#ifndef EDGERES_BETTI_HPP
#define EDGERES_BETTI_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "edgeres/complex.hpp"
#include "edgeres/field.hpp"
#include "edgeres/graph.hpp"
#include "edgeres/monomial.hpp"

namespace edgeres {

// Sparse graded Betti table of an ideal generated in degree >= d.
// When nonlinear_only is set the table holds only the entries with j > i+d
// (enough for index and regularity, not for pd).
struct BettiTable {
    int d = 2;
    bool nonlinear_only = false;
    std::map<std::pair<int, int>, long long> entries;

    long long get(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    void add(int i, int j, long long v) {
        if (v == 0) return;
        auto [it, fresh] = entries.emplace(std::make_pair(i, j), v);
        if (!fresh) it->second += v;
        if (it->second == 0) entries.erase(it);
    }

    std::string to_tsv() const;  // lines "i<TAB>j<TAB>beta", ascending (i,j)
    bool operator==(const BettiTable& o) const {
        return d == o.d && nonlinear_only == o.nonlinear_only && entries == o.entries;
    }
};

nlohmann::json betti_to_json(const BettiTable& t);

struct ResolutionStats {
    std::optional<int> index;  // empty = infinity (linear resolution)
    int pd = 0;
    int reg = 0;
    bool linear = false;
    bool almost_maximal = false;
};

nlohmann::json stats_to_json(const ResolutionStats& s);

struct HochsterOptions {
    FieldSpec field = FieldSpec::rationals();
    bool nonlinear_only = false;
    int threads = 0;  // 0 = hardware concurrency
};

// Hochster's formula over all induced subcomplexes of the given complex,
// read as the Stanley-Reisner complex of the ideal; gen_degree is recorded
// as the table's d.
BettiTable betti_from_complex(const SimplicialComplex& c, int gen_degree, const HochsterOptions& opt);

BettiTable hochster_betti(const SimpleGraph& g, const HochsterOptions& opt = {});
BettiTable betti_squarefree(const MonomialIdeal& ideal, const HochsterOptions& opt = {});

// Polarize, then Hochster; exact for arbitrary monomial ideals.
BettiTable betti_of_monomial_ideal(const MonomialIdeal& ideal, const HochsterOptions& opt = {});

// Independent oracle: homology of the Taylor complex tensored with the
// residue field, graded by lcm degree.  Requires <= 14 generators.
BettiTable betti_via_taylor(const MonomialIdeal& ideal, const FieldSpec& f);

// index, pd, reg, linearity, almost-maximality read off a full table.
ResolutionStats resolution_stats(const BettiTable& t);

// Combinatorial index: smallest induced cycle of length > 3 in the
// complement, minus 3; empty = infinity (complement chordal).
std::optional<int> index_via_cycles(const SimpleGraph& g);

bool is_almost_maximal(const SimpleGraph& g, const FieldSpec& f);

// reg of a nonlinear-only (or full) table; d when no nonlinear entries.
int reg_of_table(const BettiTable& t);
// index read off nonlinear entries; empty = infinity.
std::optional<int> index_of_table(const BettiTable& t);

}  // namespace edgeres

#endif
