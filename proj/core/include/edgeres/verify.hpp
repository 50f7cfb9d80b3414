#ifndef EDGERES_VERIFY_HPP
#define EDGERES_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "edgeres/betti.hpp"
#include "edgeres/families.hpp"
#include "edgeres/field.hpp"
#include "edgeres/graph.hpp"

namespace edgeres {

struct VerificationReport {
    std::string theorem;
    std::map<std::string, std::string> params;
    long long instances = 0;
    std::map<std::string, long long> counters;
    struct Failure {
        std::string what;
        std::string graph_text;  // counterexample in the graph file format
        std::map<std::string, std::string> details;
    };
    std::vector<Failure> failures;
    long long wall_ms = 0;

    bool pass() const { return failures.empty(); }
    // include_time=false gives the determinism-comparable form
    nlohmann::json to_json(bool include_time = true) const;
};

// One representative per isomorphism class: all 2^(n(n-1)/2) labeled graphs
// deduplicated through canonical_form.  Requires n <= 7.
std::vector<SimpleGraph> enumerate_graphs(int n, bool no_isolated, int threads = 0);

// Exhaustive check at fixed n: almost-maximal finite index holds iff the
// complement is one of the seven family graphs; also re-checks the
// minimal-cycle-length law, the vertex-count law and the pd values on every
// positive instance.
VerificationReport verify_classification(int n, const FieldSpec& f, int threads = 0);

// Power linearity for the family: gap case expects index(I^s) = 1 for
// 1 <= s <= s_max, gap-free case expects reg(I^s) = 2s for 2 <= s <= s_max.
VerificationReport verify_power_linearity(const FamilySpec& spec, int s_max, const FieldSpec& f,
                                          int threads = 0);

// (i) the colon-ideal regularity bound for I(g)^{s+1} over all minimal
// generators of I(g)^s; (ii) for each variable in the support, the squarefree
// two-term bound with equality at one term.
VerificationReport verify_regularity_bounds(const SimpleGraph& g, int s, const FieldSpec& f,
                                            int threads = 0);

// Full Betti tables of the family edge ideals identical across the fields.
VerificationReport verify_char_independence(const std::vector<FamilySpec>& specs,
                                            const std::vector<FieldSpec>& fields, int threads = 0);

}  // namespace edgeres

#endif
