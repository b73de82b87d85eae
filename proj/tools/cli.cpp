#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <random>

#include "wienerlab/coxeter.hpp"
#include "wienerlab/dendrimer.hpp"
#include "wienerlab/families.hpp"
#include "wienerlab/graph_ops.hpp"
#include "wienerlab/serialize.hpp"
#include "wienerlab/tree_identities.hpp"
#include "wienerlab/verify.hpp"
#include "wienerlab/wdistance.hpp"

namespace wienerlab::cli {

using nlohmann::json;

namespace {

struct Settings {
    std::uint64_t seed = 42;
    bool json = false;

    // compute
    std::string file;
    std::optional<Vertex> relative;
    bool analyze = false;
    // family
    std::string family_spec;
    bool family_oracle = false;
    // ops
    std::string op = "join";
    std::string g1, g2;
    bool formula_only = false, oracle_only = false, both = false;
    // dendrimer
    std::uint64_t dn = 0;
    unsigned dd = 2;
    bool d_oracle = false, d_profile = false;
    std::optional<unsigned> gf;
    // tree
    std::string tree_check;
    std::optional<std::size_t> enumerate;
    std::optional<std::size_t> random_tree_n;
    // coxeter
    std::string cx_family = "A";
    unsigned cx_rank = 1;
    bool cx_graph = false, cx_verify = false;
    // wdist
    unsigned width = 1;
    bool partial = false;
    std::optional<Vertex> wu, wv;
    // verify-all
    std::string budget = "small";
    std::string corpus;
};

json with_schema(json body) {
    json out{{"schema", kSchema}};
    out.update(body);
    return out;
}

std::string text_list(const json& array) {
    std::string s;
    for (std::size_t i = 0; i < array.size(); ++i) {
        if (i) s += ",";
        s += array[i].is_string() ? array[i].get<std::string>() : array[i].dump();
    }
    return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_verdict(std::ostream& out, const SequenceVerdict& v) {
    out << "unimodal: " << yes_no(v.unimodal) << "\n";
    if (v.peak) out << "peak: " << v.peak->first << ".." << v.peak->second << "\n";
    out << "log-concave: " << yes_no(v.log_concave) << "\n";
    out << "negative rational roots: ";
    if (v.neg_rational_roots) {
        for (std::size_t i = 0; i < v.neg_rational_roots->size(); ++i)
            out << (i ? " " : "") << to_string((*v.neg_rational_roots)[i]);
        out << "\n";
    } else {
        out << "none\n";
    }
}

int cmd_compute(const Settings& s, std::ostream& out) {
    const Graph g = read_edge_list_file(s.file);
    const WienerReport report = analyze_graph(g);
    json j = report_to_json(report);
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    std::optional<Poly> rel;
    if (s.relative) {
        rel = relative_wiener(g, *s.relative);
        j["relative"] = {{"vertex", *s.relative}, {"coeffs", poly_to_json(*rel)["coeffs"]}};
    }
    std::optional<SequenceVerdict> verdict;
    if (s.analyze && g.vertex_count() >= 2) {
        verdict = analyze_sequence(report.wiener_poly, 1);
        j["analysis"] = verdict_to_json(*verdict);
    }
    if (s.json) {
        out << j.dump() << "\n";
        return 0;
    }
    out << "n = " << g.vertex_count() << ", m = " << g.edge_count() << "\n";
    out << "W(G;q) = " << to_string(report.wiener_poly) << "\n";
    out << "coeffs: " << text_list(j["coeffs"]) << "\n";
    out << "index: " << report.wiener_index << "\n";
    out << "diameter: " << report.diameter << "\n";
    out << "ordered: " << to_string(report.ordered_poly) << "\n";
    const auto flags = as_array(report.checks);
    for (std::size_t i = 0; i < flags.size(); ++i) out << kPropertyNames[i] << ": " << yes_no(flags[i]) << "\n";
    if (rel) out << "W_" << *s.relative << "(G;q) = " << to_string(*rel) << "\n";
    if (verdict) print_verdict(out, *verdict);
    return 0;
}

int cmd_family(const Settings& s, std::ostream& out) {
    const FamilySpec spec = parse_family_spec(s.family_spec);
    validate(spec);
    const Poly closed = closed_form_poly(spec);
    const Int index = closed_form_index(spec);
    json j{{"family", to_string(spec)}, {"coeffs", poly_to_json(closed)["coeffs"]}, {"index", int_to_json(index)}};
    std::optional<Poly> oracle;
    if (s.family_oracle) {
        oracle = wiener_polynomial(construct(spec));
        j["oracle"] = poly_to_json(*oracle);
        j["match"] = *oracle == closed;
    }
    if (s.json) {
        out << with_schema(j).dump() << "\n";
    } else {
        out << to_string(spec) << ": W(G;q) = " << to_string(closed) << "\n";
        out << "coeffs: " << text_list(j["coeffs"]) << "\n";
        out << "index: " << index << "\n";
        if (oracle) out << "oracle: " << to_string(*oracle) << " (" << (*oracle == closed ? "match" : "MISMATCH") << ")\n";
    }
    return oracle && !(*oracle == closed) ? 1 : 0;
}

int cmd_ops(const Settings& s, std::ostream& out) {
    const GraphOp op = parse_graph_op(s.op);
    const Graph g1 = read_edge_list_file(s.g1);
    const Graph g2 = read_edge_list_file(s.g2);
    const bool want_formula = !s.oracle_only || s.both;
    const bool want_oracle = !s.formula_only || s.both;
    json j{{"op", std::string(to_string(op))}, {"ordered", op == GraphOp::Cartesian}};
    std::optional<Poly> formula, oracle;
    if (want_formula) {
        formula = closed_form_op_poly(op, g1, g2);
        j["formula"] = poly_to_json(*formula);
    }
    if (want_oracle) {
        oracle = oracle_op_poly(op, g1, g2);
        j["oracle"] = poly_to_json(*oracle);
    }
    const bool compared = formula && oracle;
    if (compared) j["match"] = *formula == *oracle;
    if (s.json) {
        out << with_schema(j).dump() << "\n";
    } else {
        const char* name = op == GraphOp::Cartesian ? "ordered W" : "W";
        if (formula) out << "formula " << name << " = " << to_string(*formula) << "\n";
        if (oracle) out << "oracle  " << name << " = " << to_string(*oracle) << "\n";
        if (compared) out << (*formula == *oracle ? "match" : "MISMATCH") << "\n";
    }
    return compared && !(*formula == *oracle) ? 1 : 0;
}

int cmd_dendrimer(const Settings& s, std::ostream& out) {
    namespace dm = dendrimer;
    if (s.dn < 1) throw InvalidParameter("dendrimer needs n >= 1");
    const Poly w = dm::closed_form(s.dn, s.dd);
    json j{{"n", s.dn}, {"d", s.dd}, {"coeffs", poly_to_json(w)["coeffs"]}, {"index", int_to_json(derivative_at_one(w))}};
    std::optional<dm::Label> lab;
    std::optional<dm::Thresholds> th;
    if (s.dn >= 2) {
        lab = dm::label(s.dn, s.dd);
        th = dm::thresholds(s.dd, lab->level);
        j["level"] = lab->level;
        j["label"] = lab->printed();
        j["thresholds"] = {{"n_k", int_to_json(th->n_k)}, {"m_k", int_to_json(th->m_k)}, {"p_k", int_to_json(th->p_k)}};
    }
    std::optional<dm::Profile> profile;
    if (s.d_profile) {
        profile = dm::unimodality_profile(s.dn, s.dd);
        j["peak_class"] = profile->regime == dm::PeakRegime::Lower ? "lower" : "upper";
        j["analysis"] = verdict_to_json(profile->verdict);
    }
    std::optional<dm::CrossCheck> check;
    if (s.d_oracle) {
        check = dm::cross_check(s.dn, s.dd, true);
        if (check->oracle) j["oracle"] = poly_to_json(*check->oracle);
        j["match"] = check->ok();
    }
    std::vector<Poly> series;
    if (s.gf) {
        series = dm::gf_expand(s.dd, *s.gf);
        json arr = json::array();
        for (const Poly& p : series) arr.push_back(poly_to_json(p));
        j["gf"] = arr;
    }
    if (s.json) {
        out << with_schema(j).dump() << "\n";
    } else {
        out << "D_{" << s.dn << "," << s.dd << "}: W(G;q) = " << to_string(w) << "\n";
        out << "coeffs: " << text_list(j["coeffs"]) << "\n";
        out << "index: " << derivative_at_one(w) << "\n";
        if (lab) {
            out << "level: " << lab->level << "\n";
            out << "label:";
            for (unsigned digit : lab->printed()) out << " " << digit;
            out << "\n";
            out << "thresholds: n_k = " << th->n_k << ", m_k = " << th->m_k << ", p_k = " << th->p_k << "\n";
        }
        if (profile) {
            out << "peak class: " << (profile->regime == dm::PeakRegime::Lower ? "lower" : "upper") << "\n";
            print_verdict(out, profile->verdict);
        }
        if (check) {
            if (check->oracle) out << "oracle: " << to_string(*check->oracle) << "\n";
            out << "cross-check: " << (check->ok() ? "match" : "MISMATCH") << "\n";
        }
        for (std::size_t k = 0; k < series.size(); ++k) out << "gf[" << k << "] = " << to_string(series[k]) << "\n";
    }
    return check && !check->ok() ? 1 : 0;
}

int cmd_tree(const Settings& s, std::ostream& out) {
    if (s.enumerate) {
        const auto r = trees::path_is_max(*s.enumerate);
        json j{{"n", r.n},
               {"trees", r.trees},
               {"max_index", int_to_json(r.max_index)},
               {"maximizers", r.maximizers},
               {"path_is_max", r.holds()}};
        if (s.json) {
            out << with_schema(j).dump() << "\n";
        } else {
            out << "labeled trees on " << r.n << " vertices: " << r.trees << "\n";
            out << "max index: " << r.max_index << " attained by " << r.maximizers << " trees\n";
            out << "path is max: " << yes_no(r.holds()) << "\n";
        }
        return r.holds() ? 0 : 1;
    }
    Graph t;
    if (s.random_tree_n) {
        std::mt19937_64 rng(s.seed);
        t = trees::random_tree(*s.random_tree_n, rng);
    } else if (!s.file.empty()) {
        t = read_edge_list_file(s.file);
    } else {
        throw InvalidParameter("tree needs --file, --random or --enumerate");
    }
    if (!s.tree_check.empty() && s.tree_check != "identities") {
        throw InvalidParameter("unknown tree check '" + s.tree_check + "'");
    }
    const Int cut = trees::wiener_edge_cut(t);
    const Int vertex = trees::wiener_gutman(t);
    const Int oracle = wiener_index(t);
    const bool agree = cut == oracle && vertex == oracle;
    json j{{"n", t.vertex_count()},
           {"oracle", int_to_json(oracle)},
           {"edge_cut", int_to_json(cut)},
           {"vertex", int_to_json(vertex)},
           {"agree", agree}};
    if (s.json) {
        out << with_schema(j).dump() << "\n";
    } else {
        out << "n = " << t.vertex_count() << "\n";
        out << "oracle: " << oracle << "\nedge-cut: " << cut << "\nvertex: " << vertex << "\n";
        out << (agree ? "agree" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_coxeter(const Settings& s, std::ostream& out) {
    coxeter::Spec spec{coxeter::parse_family(s.cx_family), s.cx_rank};
    const auto exps = coxeter::exponents(spec);
    const Poly p = coxeter::poincare_poly(spec);
    const SequenceVerdict verdict = analyze_sequence(p, 0);
    json j{{"group", coxeter::to_string(spec)},
           {"exponents", exps},
           {"coeffs", poly_to_json(p)["coeffs"]},
           {"analysis", verdict_to_json(verdict)}};
    const bool needs_sym = s.cx_graph || s.cx_verify;
    if (needs_sym && spec.family != coxeter::Family::A) {
        throw UnsupportedOp("reflection graphs are built for type A only");
    }
    const unsigned sym = spec.rank + 1;
    std::optional<Graph> g;
    if (s.cx_graph) {
        g = coxeter::reflection_graph(sym);
        j["graph"] = {{"vertices", g->vertex_count()},
                      {"degree", g->degree(0)},
                      {"diameter", diameter(*g)},
                      {"ordered", poly_to_json(ordered_wiener(*g))}};
    }
    std::optional<bool> verified;
    if (s.cx_verify) {
        verified = coxeter::verify_wgw(sym);
        j["verify"] = *verified;
    }
    if (s.json) {
        out << with_schema(j).dump() << "\n";
    } else {
        out << coxeter::to_string(spec) << ": Pi(W;q) = " << to_string(p) << "\n";
        out << "exponents:";
        for (unsigned e : exps) out << " " << e;
        out << "\ncoeffs: " << text_list(j["coeffs"]) << "\n";
        print_verdict(out, verdict);
        if (g) {
            out << "reflection graph of S_" << sym << ": " << g->vertex_count() << " vertices, degree "
                << g->degree(0) << ", diameter " << diameter(*g) << "\n";
            out << "ordered W = " << to_string(ordered_wiener(*g)) << "\n";
        }
        if (verified) out << "ordered W = |W| Pi(W;q): " << yes_no(*verified) << "\n";
    }
    return verified && !*verified ? 1 : 0;
}

int cmd_wdist(const Settings& s, std::ostream& out) {
    const Graph g = read_edge_list_file(s.file);
    if (s.wu.has_value() != s.wv.has_value()) throw InvalidParameter("--u and --v go together");
    if (s.wu) {
        const auto d = w_distance(g, *s.wu, *s.wv, s.width);
        json j{{"u", *s.wu}, {"v", *s.wv}, {"w", s.width}, {"distance", d ? json(*d) : json(nullptr)}};
        if (s.json) {
            out << with_schema(j).dump() << "\n";
        } else {
            out << "d_" << s.width << "(" << *s.wu << "," << *s.wv << ") = " << (d ? std::to_string(*d) : "infeasible")
                << "\n";
        }
        return 0;
    }
    const auto r = w_wiener_poly(g, s.width, s.partial);
    json j{{"w", s.width}, {"coeffs", poly_to_json(r.poly)["coeffs"]}, {"infeasible_pairs", r.infeasible_pairs}};
    if (s.json) {
        out << with_schema(j).dump() << "\n";
    } else {
        out << "W_" << s.width << "(G;q) = " << to_string(r.poly) << "\n";
        out << "coeffs: " << text_list(j["coeffs"]) << "\n";
        out << "infeasible pairs: " << r.infeasible_pairs << "\n";
    }
    return 0;
}

int cmd_verify(const Settings& s, std::ostream& out) {
    verify::Options opt;
    opt.seed = s.seed;
    opt.budget = verify::parse_budget(s.budget);
    opt.corpus_dir = s.corpus;
    if (!s.json) out << "verify-all: seed " << s.seed << ", budget " << s.budget << std::endl;
    const auto results = verify::run_all(opt, [&](const verify::CheckResult& r) {
        if (!s.json) out << verify::format_line(r) << std::endl;
    });
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    if (s.json) {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"id", r.id},
                           {"title", r.title},
                           {"passed", r.passed},
                           {"seconds", r.seconds},
                           {"detail", r.detail}});
        }
        out << with_schema({{"seed", s.seed}, {"budget", s.budget}, {"results", arr}, {"passed", ok}}).dump() << "\n";
    } else {
        out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wiener polynomials of graphs, with closed forms cross-checked against BFS", "wienerlab"};
    Settings s;
    app.add_option("--seed", s.seed, "seed for randomized inputs");
    app.add_flag("--json", s.json, "emit JSON instead of text");
    app.require_subcommand(1);
    app.fallthrough();

    auto* compute = app.add_subcommand("compute", "Wiener polynomial and checks for an edge-list file");
    compute->add_option("--file", s.file, "edge-list file")->required();
    compute->add_option("--relative", s.relative, "also report W_v for this vertex");
    compute->add_flag("--analyze", s.analyze, "unimodality, log-concavity and root analysis");

    auto* family = app.add_subcommand("family", "closed form for a named family");
    family->add_option("--spec", s.family_spec, "K:7, Kmn:3,4, W:6, P:10, C:9, Q:5 or petersen")->required();
    family->add_flag("--oracle", s.family_oracle, "compare against BFS");

    auto* ops = app.add_subcommand("ops", "graph operation closed forms");
    ops->add_option("--op", s.op, "join, cartesian, composition, disjunction, symdiff, tensor")->required();
    ops->add_option("--g1", s.g1, "first factor edge-list file")->required();
    ops->add_option("--g2", s.g2, "second factor edge-list file")->required();
    auto* f_formula = ops->add_flag("--formula", s.formula_only, "closed form only");
    auto* f_oracle = ops->add_flag("--oracle", s.oracle_only, "BFS only");
    auto* f_both = ops->add_flag("--both", s.both, "closed form and BFS (default)");
    f_formula->excludes(f_oracle)->excludes(f_both);
    f_oracle->excludes(f_both);

    auto* dend = app.add_subcommand("dendrimer", "dendrimer D_{n,d}");
    dend->add_option("--n", s.dn, "vertex count")->required();
    dend->add_option("--d", s.dd, "arity (>= 2)");
    dend->add_flag("--oracle", s.d_oracle, "compare against BFS");
    dend->add_flag("--profile", s.d_profile, "unimodality profile");
    dend->add_option("--gf", s.gf, "expand the generating function to level K");

    auto* tree = app.add_subcommand("tree", "tree Wiener identities");
    tree->add_option("--check", s.tree_check, "identities");
    tree->add_option("--file", s.file, "tree edge-list file");
    tree->add_option("--random", s.random_tree_n, "random labeled tree on N vertices (uses --seed)");
    tree->add_option("--enumerate", s.enumerate, "all labeled trees on N <= 9 vertices");

    auto* cox = app.add_subcommand("coxeter", "Poincare polynomials and reflection graphs");
    cox->add_option("--family", s.cx_family, "A, B, D, I2, H3, H4, F4, E6, E7, E8");
    cox->add_option("--rank", s.cx_rank, "rank, or m for I2(m)");
    cox->add_flag("--graph", s.cx_graph, "build the reflection graph (type A)");
    cox->add_flag("--verify", s.cx_verify, "check ordered W = |W| Pi(W;q) (type A)");

    auto* wdist = app.add_subcommand("wdist", "w-distance and w-Wiener polynomial");
    wdist->add_option("--file", s.file, "edge-list file")->required();
    wdist->add_option("--w", s.width, "container width");
    wdist->add_flag("--partial", s.partial, "skip pairs without a width-w container");
    wdist->add_option("--u", s.wu, "single pair: first vertex");
    wdist->add_option("--v", s.wv, "single pair: second vertex");

    auto* verify_all = app.add_subcommand("verify-all", "run every cross-check suite");
    verify_all->add_option("--budget", s.budget, "small or full")->check(CLI::IsMember({"small", "full"}));
    verify_all->add_option("--corpus", s.corpus, "directory of .edges files for the w-distance suite");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*compute) return cmd_compute(s, out);
        if (*family) return cmd_family(s, out);
        if (*ops) return cmd_ops(s, out);
        if (*dend) return cmd_dendrimer(s, out);
        if (*tree) return cmd_tree(s, out);
        if (*cox) return cmd_coxeter(s, out);
        if (*wdist) return cmd_wdist(s, out);
        if (*verify_all) return cmd_verify(s, out);
    } catch (const Error& e) {
        json j{{"schema", kSchema}, {"error", e.kind()}, {"message", e.what()}};
        (s.json ? out : err) << j.dump() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace wienerlab::cli
