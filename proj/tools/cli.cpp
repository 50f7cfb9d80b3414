#include "cli.hpp"

#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "edgeres/betti.hpp"
#include "edgeres/evenconn.hpp"
#include "edgeres/families.hpp"
#include "edgeres/graph_io.hpp"
#include "edgeres/monomial.hpp"
#include "edgeres/verify.hpp"

namespace edgeres::cli {

namespace {

struct Common {
    std::string field = "q";
    int threads = 0;
    bool json = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_field = true) {
    if (with_field) cmd->add_option("--field", c.field, "coefficient field: q, a prime, or p:<prime>");
    cmd->add_option("--threads", c.threads, "worker threads (0 = all cores)");
    cmd->add_flag("--json", c.json, "JSON output");
}

std::string family_label(const FamilySpec& spec) {
    bool parametric = spec.kind == FamilyKind::A1 || spec.kind == FamilyKind::A2 ||
                      spec.kind == FamilyKind::A3 || spec.kind == FamilyKind::B;
    if (parametric) return family_kind_name(spec.kind) + " t=" + std::to_string(spec.t);
    return family_kind_name(spec.kind);
}

EdgeMultiset parse_edge_list(const std::string& text) {
    EdgeMultiset edges;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("bad edge token '" + tok + "'");
        edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    }
    if (edges.empty()) throw std::invalid_argument("empty edge list");
    return edges;
}

void print_report(const VerificationReport& rep, bool json, std::ostream& out) {
    if (json) {
        out << rep.to_json(true).dump(2) << "\n";
        return;
    }
    out << (rep.pass() ? "PASS" : "FAIL") << " " << rep.theorem << " (" << rep.instances
        << " instances, " << rep.wall_ms << " ms)\n";
    for (const auto& [k, v] : rep.counters) out << "  " << k << " = " << v << "\n";
    for (const auto& f : rep.failures) {
        out << "  counterexample: " << f.what << "\n";
        std::istringstream g(f.graph_text);
        std::string line;
        while (std::getline(g, line)) out << "    " << line << "\n";
        for (const auto& [k, v] : f.details) out << "    " << k << " = " << v << "\n";
    }
}

BettiTable table_for(const std::string& path, int power, const Common& c) {
    SimpleGraph g = read_graph_file(path);
    HochsterOptions opt{FieldSpec::parse(c.field), false, c.threads};
    if (power <= 1) return hochster_betti(g, opt);
    return betti_of_monomial_ideal(ideal_power(edge_ideal(g), power), opt);
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_parsed(args, out, err);
    } catch (const CLI::ParseError&) {
        return 2;  // message already printed by CLI11 handler
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

namespace {

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"resolution invariants of edge ideals and their powers"};
    app.require_subcommand(1);

    // betti
    auto* betti_cmd = app.add_subcommand("betti", "graded Betti table of I(G) or a power");
    std::string betti_file;
    int betti_power = 1;
    Common betti_common;
    betti_cmd->add_option("graph", betti_file, "graph file")->required();
    betti_cmd->add_option("--power", betti_power, "compute I(G)^s")->check(CLI::PositiveNumber);
    add_common(betti_cmd, betti_common);

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "index, pd, reg, linearity, almost-maximality");
    std::string stats_file;
    int stats_power = 1;
    Common stats_common;
    stats_cmd->add_option("graph", stats_file, "graph file")->required();
    stats_cmd->add_option("--power", stats_power, "of I(G)^s")->check(CLI::PositiveNumber);
    add_common(stats_cmd, stats_common);

    // index
    auto* index_cmd = app.add_subcommand("index", "index via smallest minimal cycle of the complement");
    std::string index_file;
    Common index_common;
    index_cmd->add_option("graph", index_file, "graph file")->required();
    add_common(index_cmd, index_common, false);

    // family
    auto* family_cmd = app.add_subcommand("family", "emit a family complement graph");
    std::string family_kind;
    int family_t = 1;
    bool family_complement = false;
    Common family_common;
    family_cmd->add_option("--kind", family_kind, "a1|a2|a3|b|c|d1|d2")->required();
    family_cmd->add_option("--t", family_t, "family parameter (a*, b)");
    family_cmd->add_flag("--complement", family_complement, "emit the complement instead");
    add_common(family_cmd, family_common, false);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "recognize the complement among the families");
    std::string classify_file;
    Common classify_common;
    classify_cmd->add_option("graph", classify_file, "graph file")->required();
    add_common(classify_cmd, classify_common, false);

    // evenconn
    auto* evenconn_cmd = app.add_subcommand("evenconn", "graph of the colon ideal along an edge multiset");
    std::string evenconn_file, evenconn_edges;
    Common evenconn_common;
    evenconn_cmd->add_option("graph", evenconn_file, "graph file")->required();
    evenconn_cmd->add_option("--edges", evenconn_edges, "multiset, e.g. \"1-2,3-4\"")->required();
    add_common(evenconn_cmd, evenconn_common, false);

    // linquo
    auto* linquo_cmd = app.add_subcommand("linquo", "linear-quotients check of a monomial ideal");
    std::string linquo_file;
    std::vector<int> linquo_banerjee;
    Common linquo_common;
    linquo_cmd->add_option("ideal", linquo_file, "ideal file")->required();
    linquo_cmd->add_option("--banerjee", linquo_banerjee, "apply the block order for parameters t s")
        ->expected(2);
    add_common(linquo_cmd, linquo_common, false);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "machine checks of the classification and power results");
    verify_cmd->require_subcommand(1);

    auto* vc = verify_cmd->add_subcommand("classification", "exhaustive sweep at fixed n");
    int vc_n = 6;
    bool vc_extended = false;
    Common vc_common;
    vc->add_option("--n", vc_n, "vertex count (5 or 6; 7 with --extended)")->required();
    vc->add_flag("--extended", vc_extended, "allow the long n=7 run");
    add_common(vc, vc_common);

    auto* vp = verify_cmd->add_subcommand("powers", "index/reg of powers for one family");
    std::string vp_kind;
    int vp_t = 1, vp_smax = 2;
    Common vp_common;
    vp->add_option("--kind", vp_kind, "a1|a2|a3|b|c|d1|d2")->required();
    vp->add_option("--t", vp_t, "family parameter");
    vp->add_option("--smax", vp_smax, "check powers up to s_max");
    add_common(vp, vp_common);

    auto* vb = verify_cmd->add_subcommand("bounds", "regularity bounds on a family or random graphs");
    std::string vb_kind;
    int vb_t = 1, vb_s = 1, vb_random = 0, vb_seed = 1, vb_nmax = 6;
    Common vb_common;
    vb->add_option("--kind", vb_kind, "family kind (omit for --random)");
    vb->add_option("--t", vb_t, "family parameter");
    vb->add_option("--s", vb_s, "power parameter of the colon bound");
    vb->add_option("--random", vb_random, "check N random graphs instead");
    vb->add_option("--seed", vb_seed, "random seed");
    vb->add_option("--n-max", vb_nmax, "max vertices of random graphs");
    add_common(vb, vb_common);

    auto* vch = verify_cmd->add_subcommand("chars", "Betti tables across fields for all families");
    int vch_tmax = 3;
    std::string vch_fields = "q,2,3";
    Common vch_common;
    vch->add_option("--tmax", vch_tmax, "families with t up to tmax");
    vch->add_option("--fields", vch_fields, "comma-separated fields");
    add_common(vch, vch_common, false);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, out, msg);
        err << msg.str();
        return code == 0 ? 0 : 2;
    }

    if (betti_cmd->parsed()) {
        BettiTable t = table_for(betti_file, betti_power, betti_common);
        if (betti_common.json)
            out << betti_to_json(t).dump(2) << "\n";
        else
            out << t.to_tsv();
        return 0;
    }
    if (stats_cmd->parsed()) {
        BettiTable t = table_for(stats_file, stats_power, stats_common);
        if (t.entries.empty()) {
            err << "error: zero ideal has no resolution stats\n";
            return 1;
        }
        ResolutionStats s = resolution_stats(t);
        if (stats_common.json) {
            out << stats_to_json(s).dump(2) << "\n";
        } else {
            out << "index: " << (s.index ? std::to_string(*s.index) : "infinity") << "\n";
            out << "pd: " << s.pd << "\n";
            out << "reg: " << s.reg << "\n";
            out << "linear: " << (s.linear ? "true" : "false") << "\n";
            out << "almost_maximal: " << (s.almost_maximal ? "true" : "false") << "\n";
        }
        return 0;
    }
    if (index_cmd->parsed()) {
        auto idx = index_via_cycles(read_graph_file(index_file));
        if (index_common.json) {
            nlohmann::json j;
            if (idx)
                j["index"] = *idx;
            else
                j["index"] = "infinity";
            out << j.dump(2) << "\n";
        } else {
            out << (idx ? std::to_string(*idx) : "infinity") << "\n";
        }
        return 0;
    }
    if (family_cmd->parsed()) {
        FamilySpec spec{family_kind_parse(family_kind), family_t};
        SimpleGraph g = build_family(spec);
        if (family_complement) g = complement(g);
        if (family_common.json)
            out << graph_to_json(g).dump(2) << "\n";
        else
            write_graph_text(out, g);
        return 0;
    }
    if (classify_cmd->parsed()) {
        SimpleGraph g = read_graph_file(classify_file);
        auto spec = recognize_family(complement(g));
        if (classify_common.json) {
            nlohmann::json j;
            if (spec) {
                j["family"] = family_kind_name(spec->kind);
                j["t"] = spec->t;
            } else {
                j["family"] = nullptr;
            }
            out << j.dump(2) << "\n";
        } else {
            out << (spec ? family_label(*spec) : "none") << "\n";
        }
        return 0;
    }
    if (evenconn_cmd->parsed()) {
        SimpleGraph g = read_graph_file(evenconn_file);
        SimpleGraph h = even_connection_graph(g, parse_edge_list(evenconn_edges));
        if (evenconn_common.json)
            out << graph_to_json(h).dump(2) << "\n";
        else
            write_graph_text(out, h);
        return 0;
    }
    if (linquo_cmd->parsed()) {
        MonomialIdeal ideal = read_ideal_file(linquo_file);
        OrderedGenerators ord = linquo_banerjee.empty()
                                    ? OrderedGenerators::plain(ideal)
                                    : banerjee_order(ideal, linquo_banerjee[0] + 3, linquo_banerjee[1]);
        LinearQuotientsReport rep = check_linear_quotients(ord);
        if (linquo_common.json) {
            nlohmann::json j;
            j["ok"] = rep.ok;
            if (rep.witness) {
                j["witness"]["q"] = rep.witness->q;
                j["witness"]["l"] = rep.witness->l;
                j["witness"]["quotient"] = ideal.render(rep.witness->quotient);
            }
            out << j.dump(2) << "\n";
        } else if (rep.ok) {
            out << "linear quotients: ok (" << ord.entries.size() << " generators)\n";
        } else {
            out << "linear quotients: FAIL at (q=" << rep.witness->q << ", l=" << rep.witness->l
                << "), quotient " << ideal.render(rep.witness->quotient) << "\n";
        }
        return rep.ok ? 0 : 1;
    }
    if (vc->parsed()) {
        if (vc_n == 7 && !vc_extended) {
            err << "error: the n=7 sweep is long; pass --extended to run it\n";
            return 2;
        }
        auto rep = verify_classification(vc_n, FieldSpec::parse(vc_common.field), vc_common.threads);
        print_report(rep, vc_common.json, out);
        return rep.pass() ? 0 : 1;
    }
    if (vp->parsed()) {
        FamilySpec spec{family_kind_parse(vp_kind), vp_t};
        auto rep = verify_power_linearity(spec, vp_smax, FieldSpec::parse(vp_common.field), vp_common.threads);
        print_report(rep, vp_common.json, out);
        return rep.pass() ? 0 : 1;
    }
    if (vb->parsed()) {
        FieldSpec f = FieldSpec::parse(vb_common.field);
        bool pass = true;
        if (vb_random > 0) {
            std::mt19937 rng(static_cast<unsigned>(vb_seed));
            for (int k = 0; k < vb_random; ++k) {
                int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, vb_nmax - 1)));
                SimpleGraph g(n);
                for (int u = 1; u <= n; ++u)
                    for (int v = u + 1; v <= n; ++v)
                        if (rng() % 2) g.add_edge(u, v);
                if (g.edge_count() == 0) g.add_edge(1, 2);
                auto rep = verify_regularity_bounds(g, vb_s, f, vb_common.threads);
                print_report(rep, vb_common.json, out);
                pass = pass && rep.pass();
            }
        } else {
            FamilySpec spec{family_kind_parse(vb_kind), vb_t};
            auto rep = verify_regularity_bounds(complement(build_family(spec)), vb_s, f, vb_common.threads);
            print_report(rep, vb_common.json, out);
            pass = rep.pass();
        }
        return pass ? 0 : 1;
    }
    if (vch->parsed()) {
        std::vector<FamilySpec> specs;
        for (int t = 1; t <= vch_tmax; ++t) {
            specs.push_back({FamilyKind::A1, t});
            specs.push_back({FamilyKind::A2, t});
            specs.push_back({FamilyKind::A3, t});
            specs.push_back({FamilyKind::B, t});
        }
        specs.push_back({FamilyKind::C, 1});
        specs.push_back({FamilyKind::D1, 1});
        specs.push_back({FamilyKind::D2, 1});
        std::vector<FieldSpec> fields;
        std::stringstream ss(vch_fields);
        std::string tok;
        while (std::getline(ss, tok, ',')) fields.push_back(FieldSpec::parse(tok));
        auto rep = verify_char_independence(specs, fields, vch_common.threads);
        print_report(rep, vch_common.json, out);
        return rep.pass() ? 0 : 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace

}  // namespace edgeres::cli
