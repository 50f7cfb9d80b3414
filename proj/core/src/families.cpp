#include "edgeres/families.hpp"

#include <stdexcept>
#include <vector>

namespace edgeres {

FamilyKind family_kind_parse(const std::string& s) {
    if (s == "a1" || s == "A1") return FamilyKind::A1;
    if (s == "a2" || s == "A2") return FamilyKind::A2;
    if (s == "a3" || s == "A3") return FamilyKind::A3;
    if (s == "b" || s == "B") return FamilyKind::B;
    if (s == "c" || s == "C") return FamilyKind::C;
    if (s == "d1" || s == "D1") return FamilyKind::D1;
    if (s == "d2" || s == "D2") return FamilyKind::D2;
    throw std::invalid_argument("family_kind_parse: unknown kind '" + s + "'");
}

std::string family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::A1: return "A1";
        case FamilyKind::A2: return "A2";
        case FamilyKind::A3: return "A3";
        case FamilyKind::B: return "B";
        case FamilyKind::C: return "C";
        case FamilyKind::D1: return "D1";
        case FamilyKind::D2: return "D2";
    }
    throw std::logic_error("family_kind_name: unreachable");
}

std::string FamilySpec::name() const {
    switch (kind) {
        case FamilyKind::A1:
        case FamilyKind::A2:
        case FamilyKind::A3:
        case FamilyKind::B:
            return family_kind_name(kind) + "(t=" + std::to_string(t) + ")";
        default:
            return family_kind_name(kind);
    }
}

int FamilySpec::vertex_count() const {
    switch (kind) {
        case FamilyKind::A1:
        case FamilyKind::A2:
        case FamilyKind::A3:
            return t + 4;
        case FamilyKind::B:
            return t + 5;
        case FamilyKind::C:
            return 5;
        case FamilyKind::D1:
        case FamilyKind::D2:
            return 6;
    }
    throw std::logic_error("FamilySpec::vertex_count: unreachable");
}

namespace {

void check_t(const FamilySpec& spec) {
    bool parametric = spec.kind == FamilyKind::A1 || spec.kind == FamilyKind::A2 ||
                      spec.kind == FamilyKind::A3 || spec.kind == FamilyKind::B;
    if (parametric && spec.t < 1) throw std::invalid_argument("build_family: t must be >= 1");
    if (!parametric && spec.t != 1) throw std::invalid_argument("build_family: this kind takes no parameter");
}

SimpleGraph cycle_with_cone(int t, int cone_neighbors, bool full_cone, bool add_ear) {
    // cycle 1-2-...-(t+3)-1, vertex t+4 joined to the first cone_neighbors
    // cycle vertices (or to all of them), optional vertex t+5 joined to 1,2
    int n = t + 3 + 1 + (add_ear ? 1 : 0);
    SimpleGraph g(n);
    for (int i = 1; i <= t + 2; ++i) g.add_edge(i, i + 1);
    g.add_edge(1, t + 3);
    if (full_cone) {
        for (int i = 1; i <= t + 3; ++i) g.add_edge(i, t + 4);
    } else {
        for (int i = 1; i <= cone_neighbors; ++i) g.add_edge(i, t + 4);
    }
    if (add_ear) {
        g.add_edge(1, t + 5);
        g.add_edge(2, t + 5);
    }
    return g;
}

}  // namespace

SimpleGraph build_family(const FamilySpec& spec) {
    check_t(spec);
    int t = spec.t;
    switch (spec.kind) {
        case FamilyKind::A1:
            return cycle_with_cone(t, 1, false, false);
        case FamilyKind::A2:
            return cycle_with_cone(t, 2, false, false);
        case FamilyKind::A3:
            return cycle_with_cone(t, 3, false, false);
        case FamilyKind::B:
            return cycle_with_cone(t, 0, true, true);
        case FamilyKind::C:
            return SimpleGraph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {3, 5}});
        case FamilyKind::D1: {
            SimpleGraph g = SimpleGraph::from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
            for (int i = 1; i <= 4; ++i) {
                g.add_edge(i, 5);
                g.add_edge(i, 6);
            }
            return g;
        }
        case FamilyKind::D2:
            return SimpleGraph::from_edges(
                6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {1, 6}, {3, 6}, {4, 6}, {5, 6}});
    }
    throw std::logic_error("build_family: unreachable");
}

std::optional<FamilySpec> recognize_family(const SimpleGraph& gbar) {
    int n = gbar.vertex_count();
    if (n > 9) throw std::invalid_argument("recognize_family: requires n <= 9");
    std::vector<FamilySpec> candidates;
    if (n >= 5) {
        candidates.push_back({FamilyKind::A1, n - 4});
        candidates.push_back({FamilyKind::A2, n - 4});
        candidates.push_back({FamilyKind::A3, n - 4});
    }
    if (n >= 6) candidates.push_back({FamilyKind::B, n - 5});
    if (n == 5) candidates.push_back({FamilyKind::C, 1});
    if (n == 6) {
        candidates.push_back({FamilyKind::D1, 1});
        candidates.push_back({FamilyKind::D2, 1});
    }
    std::optional<FamilySpec> hit;
    for (const auto& spec : candidates) {
        if (!is_isomorphic(gbar, build_family(spec))) continue;
        if (hit) throw std::logic_error("recognize_family: two distinct specs matched");
        hit = spec;
    }
    return hit;
}

ExpectedNonlinearBetti expected_nonlinear_betti(const FamilySpec& spec) {
    check_t(spec);
    int t = spec.t;
    ExpectedNonlinearBetti e{};
    e.t = t;
    e.index = t;
    e.pd = t + 1;
    e.reg = spec.kind == FamilyKind::D1 ? 4 : 3;
    switch (spec.kind) {
        case FamilyKind::A1: e.beta_t_t3 = 1; break;
        case FamilyKind::A2: e.beta_t_t3 = 1; break;
        case FamilyKind::B:  e.beta_t_t3 = 1; break;
        case FamilyKind::A3: e.beta_t_t3 = 2; break;
        default:             e.beta_t_t3 = 3; break;  // C, D1, D2
    }
    e.beta_t1_t3 = (spec.kind == FamilyKind::A1 || spec.kind == FamilyKind::B) ? 1 : 0;
    switch (spec.kind) {
        case FamilyKind::C:
        case FamilyKind::D2: e.beta_t1_t4 = 2; break;
        case FamilyKind::D1: e.beta_t1_t4 = 0; break;
        default:             e.beta_t1_t4 = 1; break;  // A1, A2, A3, B
    }
    e.beta_t1_t5 = spec.kind == FamilyKind::D1 ? 1 : 0;
    return e;
}

}  // namespace edgeres
