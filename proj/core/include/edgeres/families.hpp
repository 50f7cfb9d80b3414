#ifndef EDGERES_FAMILIES_HPP
#define EDGERES_FAMILIES_HPP

#include <optional>
#include <string>

#include "edgeres/graph.hpp"

namespace edgeres {

enum class FamilyKind { A1, A2, A3, B, C, D1, D2 };

FamilyKind family_kind_parse(const std::string& s);
std::string family_kind_name(FamilyKind k);

// Parametric descriptor of the seven complement-graph families.  A1..A3 and
// B take t >= 1; C, D1, D2 are rigid (t fixed at 1).
struct FamilySpec {
    FamilyKind kind;
    int t = 1;

    int vertex_count() const;
    bool operator==(const FamilySpec& o) const { return kind == o.kind && t == o.t; }
    std::string name() const;
};

// The complement graph G-bar of the family; callers complement it to get the
// graph of the edge ideal.
SimpleGraph build_family(const FamilySpec& spec);

// The unique family spec whose build is isomorphic to gbar, if any.
// Requires n <= 9 (canonical-form guard).
std::optional<FamilySpec> recognize_family(const SimpleGraph& gbar);

// Nonlinear Betti data of the edge ideal of the complement of the family
// graph: the four possibly-nonzero nonlinear entries plus index/pd/reg.
struct ExpectedNonlinearBetti {
    int t;
    long long beta_t_t3;    // beta_{t, t+3}
    long long beta_t1_t3;   // beta_{t+1, t+3}
    long long beta_t1_t4;   // beta_{t+1, t+4}
    long long beta_t1_t5;   // beta_{t+1, t+5}
    int index;              // = t
    int pd;                 // = t+1
    int reg;                // 3, or 4 for D1
};

ExpectedNonlinearBetti expected_nonlinear_betti(const FamilySpec& spec);

}  // namespace edgeres

#endif
