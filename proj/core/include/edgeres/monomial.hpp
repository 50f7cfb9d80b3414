#ifndef EDGERES_MONOMIAL_HPP
#define EDGERES_MONOMIAL_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "edgeres/graph.hpp"

namespace edgeres {

// Monomial as a dense exponent vector over the ambient variable list of the
// ideal it belongs to.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(static_cast<size_t>(nvars), 0)); }

    int nvars() const { return static_cast<int>(exps.size()); }
    int degree() const;
    bool is_one() const { return degree() == 0; }
    bool is_squarefree() const;
    int exp(int v) const { return exps[static_cast<size_t>(v)]; }
    std::vector<int> support() const;  // variable indices with positive exponent

    bool divides(const Monomial& o) const;
    Monomial times(const Monomial& o) const;
    Monomial quotient(const Monomial& o) const;  // this / gcd(this, o)
    Monomial divide_exact(const Monomial& o) const;
    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }
};

// Total order used to keep generator lists deterministic: degree, then
// lexicographic on exponent vectors.
bool monomial_order_less(const Monomial& a, const Monomial& b);

struct MonomialIdeal {
    std::vector<std::string> vars;
    std::vector<Monomial> gens;  // minimal generating set, sorted

    static MonomialIdeal zero(std::vector<std::string> vars) { return MonomialIdeal{std::move(vars), {}}; }
    bool is_zero() const { return gens.empty(); }
    bool contains_unit() const;
    bool is_squarefree() const;
    bool is_equigenerated() const;
    int min_degree() const;  // 0 for the zero ideal

    std::string render(const Monomial& m) const;
    bool operator==(const MonomialIdeal& o) const { return vars == o.vars && gens == o.gens; }
};

std::vector<std::string> default_vars(int n);

MonomialIdeal edge_ideal(const SimpleGraph& g);
MonomialIdeal minimalize(std::vector<std::string> vars, std::vector<Monomial> gens);
MonomialIdeal ideal_power(const MonomialIdeal& i, int s);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon_ideal(const MonomialIdeal& i, const Monomial& m);

// Monomial ideal generated by single variables (for colon/sum experiments).
MonomialIdeal variable_ideal(const std::vector<std::string>& vars, const std::vector<int>& var_indices);

// x_v^a  ->  x_{v,1} ... x_{v,a}; copy 1 of each variable is the variable
// itself, so squarefree ideals polarize to themselves.
struct Polarization {
    MonomialIdeal ideal;
    // var_origin[k] = (index of the base variable in the input ambient, copy index >= 1)
    std::vector<std::pair<int, int>> var_origin;
};
Polarization polarize(const MonomialIdeal& i);

// Generators in an explicit order, with the block/edge-multiset/tail
// bookkeeping produced by banerjee_order.
struct OrderedGenerators {
    std::vector<std::string> vars;
    struct Entry {
        Monomial m;
        int block = 0;                              // power of the last variable
        std::vector<std::pair<int, int>> edge_multiset;  // ascending, 1-based vertex pairs
        Monomial tail;
    };
    std::vector<Entry> entries;

    static OrderedGenerators plain(const MonomialIdeal& i);  // ideal's stored order, no bookkeeping
};

struct LinearQuotientsReport {
    bool ok = true;
    struct Witness {
        int q = 0;  // 1-based positions into the ordered sequence
        int l = 0;
        Monomial quotient;
    };
    std::optional<Witness> witness;
};

// ok iff for every l > 1 the colon ideal ((m_1,...,m_{l-1}) : m_l) is
// generated by variables, tested elementwise on the quotients m_q/gcd(m_q,m_l).
LinearQuotientsReport check_linear_quotients(const OrderedGenerators& o);

// Order the generators of either I(C-bar)^s (x_3..x_{t+4}) or of the colon
// ideal (I^{s+1} : x_{t+5}) for the graph whose complement is the cycle
// 1-2-...-cycle_len-1 with the extra cone/whisker vertices, into blocks
// L_0 < ... < L_s; within a block, smallest edge-multiset presentation first,
// ties broken on the tail; in the edge-free block the pure powers
// x_{t+5}^s x_i^{s+1} come last, ordered by i.
OrderedGenerators banerjee_order(const MonomialIdeal& j, int cycle_len, int s);

// io
MonomialIdeal read_ideal_text(std::istream& in);
void write_ideal_text(std::ostream& out, const MonomialIdeal& i);
MonomialIdeal read_ideal_file(const std::string& path);
nlohmann::json ideal_to_json(const MonomialIdeal& i);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

}  // namespace edgeres

#endif
