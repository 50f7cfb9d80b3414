#include "edgeres/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace edgeres {

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

bool Monomial::is_squarefree() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
    std::vector<int> out;
    for (int v = 0; v < nvars(); ++v)
        if (exps[v] > 0) out.push_back(v);
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    for (int v = 0; v < nvars(); ++v)
        if (exps[v] > o.exps[v]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r = *this;
    for (int v = 0; v < nvars(); ++v) r.exps[v] += o.exps[v];
    return r;
}

Monomial Monomial::quotient(const Monomial& o) const {
    Monomial r = *this;
    for (int v = 0; v < nvars(); ++v) r.exps[v] = std::max(0, exps[v] - o.exps[v]);
    return r;
}

Monomial Monomial::divide_exact(const Monomial& o) const {
    Monomial r = *this;
    for (int v = 0; v < nvars(); ++v) {
        r.exps[v] = exps[v] - o.exps[v];
        if (r.exps[v] < 0) throw std::invalid_argument("Monomial::divide_exact: not divisible");
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int v = 0; v < a.nvars(); ++v) r.exps[v] = std::min(a.exps[v], b.exps[v]);
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int v = 0; v < a.nvars(); ++v) r.exps[v] = std::max(a.exps[v], b.exps[v]);
    return r;
}

bool monomial_order_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps > b.exps;  // within a degree: x1-heavy generators first
}

bool MonomialIdeal::contains_unit() const {
    return std::any_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_one(); });
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::is_equigenerated() const {
    if (gens.empty()) return true;
    int d = gens.front().degree();
    return std::all_of(gens.begin(), gens.end(), [d](const Monomial& m) { return m.degree() == d; });
}

int MonomialIdeal::min_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& m : gens) {
        if (first || m.degree() < d) d = m.degree();
        first = false;
    }
    return d;
}

std::string MonomialIdeal::render(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::string out;
    for (int v = 0; v < m.nvars(); ++v) {
        if (m.exps[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[static_cast<size_t>(v)];
        if (m.exps[v] > 1) out += "^" + std::to_string(m.exps[v]);
    }
    return out;
}

std::vector<std::string> default_vars(int n) {
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

MonomialIdeal edge_ideal(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<Monomial> gens;
    for (auto [u, v] : g.edges()) {
        Monomial m = Monomial::one(n);
        m.exps[u - 1] = 1;
        m.exps[v - 1] = 1;
        gens.push_back(std::move(m));
    }
    return minimalize(default_vars(n), std::move(gens));
}

MonomialIdeal minimalize(std::vector<std::string> vars, std::vector<Monomial> gens) {
    for (const auto& m : gens)
        if (m.nvars() != static_cast<int>(vars.size()))
            throw std::invalid_argument("minimalize: generator/ambient size mismatch");
    std::sort(gens.begin(), gens.end(), monomial_order_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> keep;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool dominated = false;
        for (const auto& k : keep)
            if (k.divides(gens[i])) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(gens[i]);
    }
    return MonomialIdeal{std::move(vars), std::move(keep)};
}

MonomialIdeal ideal_power(const MonomialIdeal& i, int s) {
    if (s < 1) throw std::invalid_argument("ideal_power: s must be >= 1");
    double work = 1;
    for (int k = 0; k < s; ++k) work *= static_cast<double>(i.gens.size());
    if (work > 1e7) throw std::invalid_argument("ideal_power: generator count guard exceeded");
    if (i.gens.empty()) return MonomialIdeal::zero(i.vars);
    std::vector<Monomial> products;
    std::vector<int> pick(static_cast<size_t>(s), 0);
    // combinations with repetition: non-decreasing index tuples
    while (true) {
        Monomial m = Monomial::one(static_cast<int>(i.vars.size()));
        for (int k = 0; k < s; ++k) m = m.times(i.gens[static_cast<size_t>(pick[static_cast<size_t>(k)])]);
        products.push_back(std::move(m));
        int k = s - 1;
        while (k >= 0 && pick[static_cast<size_t>(k)] == static_cast<int>(i.gens.size()) - 1) --k;
        if (k < 0) break;
        int v = ++pick[static_cast<size_t>(k)];
        for (int j = k + 1; j < s; ++j) pick[static_cast<size_t>(j)] = v;
    }
    return minimalize(i.vars, std::move(products));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.vars != b.vars) throw std::invalid_argument("ideal_sum: ambient variable mismatch");
    std::vector<Monomial> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return minimalize(a.vars, std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.vars != b.vars) throw std::invalid_argument("ideal_product: ambient variable mismatch");
    std::vector<Monomial> gens;
    for (const auto& u : a.gens)
        for (const auto& v : b.gens) gens.push_back(u.times(v));
    return minimalize(a.vars, std::move(gens));
}

MonomialIdeal colon_ideal(const MonomialIdeal& i, const Monomial& m) {
    if (m.nvars() != static_cast<int>(i.vars.size()))
        throw std::invalid_argument("colon_ideal: ambient mismatch");
    std::vector<Monomial> gens;
    gens.reserve(i.gens.size());
    for (const auto& u : i.gens) gens.push_back(u.quotient(m));
    return minimalize(i.vars, std::move(gens));
}

MonomialIdeal variable_ideal(const std::vector<std::string>& vars, const std::vector<int>& var_indices) {
    std::vector<Monomial> gens;
    for (int v : var_indices) {
        Monomial m = Monomial::one(static_cast<int>(vars.size()));
        m.exps[static_cast<size_t>(v)] = 1;
        gens.push_back(std::move(m));
    }
    return minimalize(vars, std::move(gens));
}

Polarization polarize(const MonomialIdeal& i) {
    int nv = static_cast<int>(i.vars.size());
    std::vector<std::pair<int, int>> origin;
    for (int v = 0; v < nv; ++v) origin.emplace_back(v, 1);
    if (i.is_squarefree()) return Polarization{i, origin};

    std::vector<int> max_exp(static_cast<size_t>(nv), 0);
    for (const auto& m : i.gens)
        for (int v = 0; v < nv; ++v) max_exp[static_cast<size_t>(v)] = std::max(max_exp[static_cast<size_t>(v)], m.exps[v]);

    std::vector<std::string> vars2 = i.vars;
    std::map<std::pair<int, int>, int> slot;  // (base, copy >= 2) -> new index
    for (int v = 0; v < nv; ++v)
        for (int c = 2; c <= max_exp[static_cast<size_t>(v)]; ++c) {
            std::string name = i.vars[static_cast<size_t>(v)] + "_" + std::to_string(c);
            if (std::find(vars2.begin(), vars2.end(), name) != vars2.end())
                throw std::invalid_argument("polarize: variable name clash on " + name);
            slot[{v, c}] = static_cast<int>(vars2.size());
            vars2.push_back(name);
            origin.emplace_back(v, c);
        }

    std::vector<Monomial> gens2;
    gens2.reserve(i.gens.size());
    for (const auto& m : i.gens) {
        Monomial p = Monomial::one(static_cast<int>(vars2.size()));
        for (int v = 0; v < nv; ++v)
            for (int c = 1; c <= m.exps[v]; ++c) {
                int idx = c == 1 ? v : slot[{v, c}];
                p.exps[static_cast<size_t>(idx)] = 1;
            }
        gens2.push_back(std::move(p));
    }
    std::sort(gens2.begin(), gens2.end(), monomial_order_less);
    return Polarization{MonomialIdeal{std::move(vars2), std::move(gens2)}, std::move(origin)};
}

OrderedGenerators OrderedGenerators::plain(const MonomialIdeal& i) {
    OrderedGenerators o;
    o.vars = i.vars;
    for (const auto& m : i.gens) o.entries.push_back({m, 0, {}, Monomial::one(m.nvars())});
    return o;
}

LinearQuotientsReport check_linear_quotients(const OrderedGenerators& o) {
    if (o.entries.empty()) throw std::invalid_argument("check_linear_quotients: empty generator sequence");
    int r = static_cast<int>(o.entries.size());
    for (int l = 1; l < r; ++l) {
        const Monomial& ml = o.entries[static_cast<size_t>(l)].m;
        // variables available as degree-one quotients against m_l
        std::vector<bool> var_ok(static_cast<size_t>(ml.nvars()), false);
        for (int p = 0; p < l; ++p) {
            Monomial q = o.entries[static_cast<size_t>(p)].m.quotient(ml);
            if (q.degree() == 1) var_ok[static_cast<size_t>(q.support().front())] = true;
        }
        for (int q = 0; q < l; ++q) {
            Monomial mq = o.entries[static_cast<size_t>(q)].m.quotient(ml);
            if (mq.degree() <= 1) continue;
            bool covered = false;
            for (int v : mq.support())
                if (var_ok[static_cast<size_t>(v)]) {
                    covered = true;
                    break;
                }
            if (!covered)
                return LinearQuotientsReport{false, LinearQuotientsReport::Witness{q + 1, l + 1, mq}};
        }
    }
    return LinearQuotientsReport{};
}

namespace {

// Complement of the cycle 1-2-...-len-1 on [len]: chords a<b with b-a >= 2,
// excluding {1,len}.
bool is_cycle_complement_edge(int a, int b, int len) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > len || b - a < 2) return false;
    return !(a == 1 && b == len);
}

std::vector<std::pair<int, int>> cycle_complement_edges(int len) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= len; ++a)
        for (int b = a + 2; b <= len; ++b)
            if (is_cycle_complement_edge(a, b, len)) out.emplace_back(a, b);
    return out;
}

// Lexicographic comparison of monomials induced by x_1 < x_2 < ... < x_n:
// the highest variable where the exponents differ decides, and the monomial
// with the smaller exponent there is smaller.
bool lex_less_top(const Monomial& a, const Monomial& b) {
    for (int v = a.nvars() - 1; v >= 0; --v)
        if (a.exps[v] != b.exps[v]) return a.exps[v] < b.exps[v];
    return false;
}

struct Presentation {
    std::vector<std::pair<int, int>> edges;  // ascending multiset
    Monomial tail;
    bool found = false;
};

// Smallest edge-multiset factorization of rest into `count` cycle-complement
// edges times a tail supported on tail_lo..tail_hi (1-based vertices).  DFS in
// ascending edge order visits multisets in their total order, so the first
// complete factorization is the minimum.
struct FactorSearch {
    const std::vector<std::pair<int, int>>& all_edges;
    int tail_lo, tail_hi, tail_deg;
    Presentation result;

    bool tail_ok(const Monomial& rest) const {
        if (rest.degree() != tail_deg) return false;
        for (int v = 0; v < rest.nvars(); ++v)
            if (rest.exps[v] > 0 && (v + 1 < tail_lo || v + 1 > tail_hi)) return false;
        return true;
    }

    bool rec(Monomial rest, int count, size_t min_edge, std::vector<std::pair<int, int>>& chosen) {
        if (count == 0) {
            if (!tail_ok(rest)) return false;
            result.edges = chosen;
            result.tail = rest;
            result.found = true;
            return true;
        }
        for (size_t e = min_edge; e < all_edges.size(); ++e) {
            auto [a, b] = all_edges[e];
            if (rest.exps[a - 1] < 1 || rest.exps[b - 1] < 1) continue;
            Monomial next = rest;
            --next.exps[a - 1];
            --next.exps[b - 1];
            chosen.push_back(all_edges[e]);
            if (rec(std::move(next), count - 1, e, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

OrderedGenerators banerjee_order(const MonomialIdeal& j, int cycle_len, int s) {
    if (cycle_len < 4) throw std::invalid_argument("banerjee_order: cycle length must be >= 4");
    if (s < 0) throw std::invalid_argument("banerjee_order: s must be >= 0");
    int t = cycle_len - 3;
    int nv = static_cast<int>(j.vars.size());
    if (nv != t + 4 && nv != t + 5)
        throw std::invalid_argument("banerjee_order: ambient must have t+4 or t+5 variables");
    bool has_cone_var = nv == t + 5;  // x_{t+5} present: colon-ideal shape
    auto edges = cycle_complement_edges(cycle_len);

    OrderedGenerators out;
    out.vars = j.vars;
    for (const auto& m : j.gens) {
        int k = has_cone_var ? m.exps[static_cast<size_t>(t + 4)] : 0;
        if (k > s) throw std::invalid_argument("banerjee_order: generator '" + j.render(m) + "' not of the expected shape");
        Monomial rest = m;
        if (has_cone_var) rest.exps[static_cast<size_t>(t + 4)] = 0;
        FactorSearch fs{edges, 3, t + 4, k + 1, {}};
        std::vector<std::pair<int, int>> chosen;
        fs.rec(rest, s - k, 0, chosen);
        if (!fs.result.found)
            throw std::invalid_argument("banerjee_order: generator '" + j.render(m) + "' not of the expected shape");
        out.entries.push_back({m, k, fs.result.edges, fs.result.tail});
    }

    // Within a block: smallest edge multiset first; on ties, tails that are a
    // power of a single variable come last (ordered by that variable), the
    // rest by the lex order induced by x_1 < ... < x_{t+5}.  The single-
    // variable exception must hold in every block with tails of degree >= 2,
    // not only the edge-free one: the witness that fixes a pair sharing an
    // edge lives one power down, where its block is the top one.
    std::sort(out.entries.begin(), out.entries.end(),
              [&](const OrderedGenerators::Entry& a, const OrderedGenerators::Entry& b) {
                  if (a.block != b.block) return a.block < b.block;
                  if (a.edge_multiset != b.edge_multiset) return a.edge_multiset < b.edge_multiset;
                  auto pure_var = [](const Monomial& tail) -> int {
                      auto sup = tail.support();
                      return (sup.size() == 1 && tail.degree() >= 2) ? sup.front() : -1;
                  };
                  int pa = pure_var(a.tail), pb = pure_var(b.tail);
                  if ((pa >= 0) != (pb >= 0)) return pb >= 0;
                  if (pa >= 0) return pa < pb;
                  return lex_less_top(a.tail, b.tail);
              });
    return out;
}

// ---- io ------------------------------------------------------------------

namespace {

// numeric-aware comparison so x2 < x10 and x3 < x3_2 < x4
bool natural_name_less(const std::string& a, const std::string& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            long long va = std::stoll(a.substr(i, i2 - i));
            long long vb = std::stoll(b.substr(j, j2 - j));
            if (va != vb) return va < vb;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() < b.size();
}

std::vector<std::pair<std::string, int>> parse_generator(const std::string& line) {
    std::vector<std::pair<std::string, int>> factors;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
        if (tok.empty()) continue;
        auto caret = tok.find('^');
        std::string name = tok.substr(0, caret);
        int e = 1;
        if (caret != std::string::npos) e = std::stoi(tok.substr(caret + 1));
        if (name.empty() || e < 1) throw std::invalid_argument("ideal text: bad factor '" + tok + "'");
        factors.emplace_back(name, e);
    }
    return factors;
}

}  // namespace

MonomialIdeal read_ideal_text(std::istream& in) {
    std::vector<std::vector<std::pair<std::string, int>>> parsed;
    std::set<std::string, decltype(&natural_name_less)> names(&natural_name_less);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto factors = parse_generator(line);
        for (const auto& [name, e] : factors) names.insert(name);
        parsed.push_back(std::move(factors));
    }
    std::vector<std::string> vars(names.begin(), names.end());
    std::map<std::string, int> index;
    for (size_t k = 0; k < vars.size(); ++k) index[vars[k]] = static_cast<int>(k);
    std::vector<Monomial> gens;
    for (const auto& factors : parsed) {
        Monomial m = Monomial::one(static_cast<int>(vars.size()));
        for (const auto& [name, e] : factors) m.exps[static_cast<size_t>(index[name])] += e;
        gens.push_back(std::move(m));
    }
    return minimalize(std::move(vars), std::move(gens));
}

void write_ideal_text(std::ostream& out, const MonomialIdeal& i) {
    out << "# vars:";
    for (const auto& v : i.vars) out << " " << v;
    out << "\n";
    for (const auto& m : i.gens) out << i.render(m) << "\n";
}

MonomialIdeal read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open ideal file: " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json jj;
        in >> jj;
        return ideal_from_json(jj);
    }
    return read_ideal_text(in);
}

nlohmann::json ideal_to_json(const MonomialIdeal& i) {
    nlohmann::json out;
    out["vars"] = i.vars;
    auto arr = nlohmann::json::array();
    for (const auto& m : i.gens) arr.push_back(i.render(m));
    out["generators"] = arr;
    return out;
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (size_t k = 0; k < vars.size(); ++k) index[vars[k]] = static_cast<int>(k);
    std::vector<Monomial> gens;
    for (const auto& gj : j.at("generators")) {
        Monomial m = Monomial::one(static_cast<int>(vars.size()));
        for (const auto& [name, e] : parse_generator(gj.get<std::string>())) {
            auto it = index.find(name);
            if (it == index.end()) throw std::invalid_argument("ideal json: unknown variable " + name);
            m.exps[static_cast<size_t>(it->second)] += e;
        }
        gens.push_back(std::move(m));
    }
    return minimalize(std::move(vars), std::move(gens));
}

}  // namespace edgeres
