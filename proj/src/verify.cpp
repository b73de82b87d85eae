#include "wienerlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "wienerlab/coxeter.hpp"
#include "wienerlab/dendrimer.hpp"
#include "wienerlab/families.hpp"
#include "wienerlab/generators.hpp"
#include "wienerlab/graph_ops.hpp"
#include "wienerlab/tree_identities.hpp"
#include "wienerlab/wdistance.hpp"
#include "wienerlab/wiener.hpp"

#ifndef WIENERLAB_DATA_DIR
#define WIENERLAB_DATA_DIR "data"
#endif

namespace wienerlab::verify {

Budget parse_budget(const std::string& text) {
    if (text == "small") return Budget::Small;
    if (text == "full") return Budget::Full;
    throw ParseError("unknown budget '" + text + "' (expected small or full)");
}

const char* budget_name(Budget budget) { return budget == Budget::Small ? "small" : "full"; }

std::string default_corpus_dir() { return WIENERLAB_DATA_DIR; }

namespace {

// Collects comparison outcomes; keeps the first few failures for the report.
class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& what) {
        ++cases_;
        if (ok) return;
        ++failures_;
        if (messages_.size() < 3) messages_.push_back(what());
    }

    std::size_t cases() const { return cases_; }
    bool ok() const { return failures_ == 0; }

    std::string summary(const std::string& extra) const {
        std::ostringstream os;
        os << cases_ << " comparisons";
        if (!extra.empty()) os << ", " << extra;
        if (failures_ > 0) {
            os << "; " << failures_ << " failed:";
            for (const auto& m : messages_) os << " [" << m << "]";
        }
        return os.str();
    }

private:
    std::size_t cases_ = 0;
    std::size_t failures_ = 0;
    std::vector<std::string> messages_;
};

bool full(const Options& opt) { return opt.budget == Budget::Full; }

// Each criterion draws from its own stream so suites can run in any order.
std::mt19937_64 stream(const Options& opt, int id) {
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                      static_cast<std::uint32_t>(id)};
    return std::mt19937_64(seq);
}

CheckResult run(int id, std::string title, std::optional<double> limit, const Options& opt,
                const std::function<std::string(Tally&)>& body) {
    CheckResult r;
    r.id = id;
    r.title = std::move(title);
    r.limit_seconds = limit;
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    std::string extra;
    bool threw = false;
    try {
        extra = body(tally);
    } catch (const Error& e) {
        threw = true;
        extra = std::string(e.kind()) + ": " + e.what();
    } catch (const std::exception& e) {
        threw = true;
        extra = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = !threw && tally.ok() && tally.cases() > 0;
    r.detail = threw ? extra : tally.summary(extra);
    if (full(opt) && limit && r.seconds > *limit) {
        r.passed = false;
        r.detail += "; exceeded time limit";
    }
    return r;
}

std::string poly_text(const Poly& p) { return to_string(p); }

}  // namespace

CheckResult check_petersen(const Options& opt) {
    return run(1, "Petersen polynomial, index and diameter", 1.0, opt, [](Tally& t) {
        const Graph g = construct(FamilySpec::petersen());
        const Poly w = wiener_polynomial(g);
        const Poly expected{0, 15, 30};
        t.expect(w == expected, [&] { return "W = " + poly_text(w); });
        const Int index = wiener_index(g);
        t.expect(index == 75, [&] { return "index " + to_string(index); });
        const Distance diam = diameter(g);
        t.expect(diam == 2, [&] { return "diameter " + std::to_string(diam); });
        return std::string("W = ") + poly_text(w);
    });
}

CheckResult check_family_sweep(const Options& opt) {
    return run(2, "family closed forms vs BFS", 30.0, opt, [&](Tally& t) {
        const bool f = full(opt);
        const std::size_t path_cap = f ? 200 : 60;
        const std::size_t cube_cap = f ? 8 : 6;
        const std::size_t bip_cap = f ? 100 : 30;
        const std::size_t wheel_cap = f ? 100 : 40;
        std::vector<FamilySpec> specs{FamilySpec::petersen()};
        for (std::size_t n = 1; n <= path_cap; ++n) specs.push_back(FamilySpec::path(n));
        for (std::size_t n = 3; n <= path_cap; ++n) specs.push_back(FamilySpec::cycle(n));
        for (std::size_t n = 1; n <= wheel_cap; ++n) specs.push_back(FamilySpec::complete(n));
        for (std::size_t n = 4; n <= wheel_cap; ++n) specs.push_back(FamilySpec::wheel(n));
        for (std::size_t d = 1; d <= cube_cap; ++d) specs.push_back(FamilySpec::hypercube(d));
        for (std::size_t m = 1; m < bip_cap; ++m)
            for (std::size_t n = m; m + n <= bip_cap; ++n) specs.push_back(FamilySpec::complete_bipartite(m, n));
        for (const auto& spec : specs) {
            const Graph g = construct(spec);
            const Poly oracle = wiener_polynomial(g);
            const Poly closed = closed_form_poly(spec);
            t.expect(closed == oracle,
                     [&] { return to_string(spec) + ": closed " + poly_text(closed) + " vs " + poly_text(oracle); });
            const Int index = closed_form_index(spec);
            const Int oracle_index = derivative_at_one(oracle);
            t.expect(index == oracle_index, [&] {
                return to_string(spec) + ": index " + to_string(index) + " vs " + to_string(oracle_index);
            });
        }
        return std::to_string(specs.size()) + " graphs";
    });
}

CheckResult check_graph_ops(const Options& opt) {
    return run(3, "graph operation closed forms vs BFS", 60.0, opt, [&](Tally& t) {
        auto rng = stream(opt, 3);
        const std::size_t pairs = full(opt) ? 50 : 10;
        const GraphOp ops[] = {GraphOp::Join, GraphOp::Cartesian, GraphOp::Composition, GraphOp::Disjunction,
                               GraphOp::SymmetricDifference};
        for (GraphOp op : ops) {
            const std::size_t cap = op == GraphOp::Cartesian ? 20 : 12;
            for (std::size_t i = 0; i < pairs; ++i) {
                const Graph g1 = random_connected_graph(2, cap, 0.5, rng);
                const Graph g2 = random_connected_graph(2, cap, 0.5, rng);
                const Poly closed = closed_form_op_poly(op, g1, g2);
                const Poly oracle = oracle_op_poly(op, g1, g2);
                t.expect(closed == oracle, [&] {
                    return std::string(to_string(op)) + " n1=" + std::to_string(g1.vertex_count()) +
                           " n2=" + std::to_string(g2.vertex_count()) + ": " + poly_text(closed) + " vs " +
                           poly_text(oracle);
                });
            }
        }
        return std::to_string(pairs) + " pairs per operation, seed " + std::to_string(opt.seed);
    });
}

CheckResult check_grid(const Options& opt) {
    return run(4, "grid ordered polynomial", 10.0, opt, [](Tally& t) {
        for (std::size_t m = 1; m <= 8; ++m) {
            for (std::size_t n = 1; n <= 8; ++n) {
                const Graph grid = apply_op(GraphOp::Cartesian, construct(FamilySpec::path(m)),
                                            construct(FamilySpec::path(n)));
                const Poly oracle = ordered_wiener(grid);
                const Poly closed = grid_ordered_poly(m, n);
                t.expect(closed == oracle, [&] {
                    return "P" + std::to_string(m) + " x P" + std::to_string(n) + ": " + poly_text(closed);
                });
            }
        }
        return std::string();
    });
}

CheckResult check_dendrimer_closed_form(const Options& opt) {
    return run(5, "dendrimer closed form vs BFS", 120.0, opt, [&](Tally& t) {
        const std::uint64_t sweep = full(opt) ? 500 : 150;
        const std::size_t random_cases = full(opt) ? 200 : 20;
        const std::uint64_t random_cap = full(opt) ? 2000 : 600;
        auto record = [&t](std::uint64_t n, unsigned d) {
            const auto c = dendrimer::cross_check(n, d, true);
            t.expect(c.ok(), [&] {
                std::string why = "D_{" + std::to_string(n) + "," + std::to_string(d) + "}:";
                if (!c.matches_oracle) why += " closed " + poly_text(c.closed) + " vs oracle " + poly_text(*c.oracle);
                if (!c.telescoping) why += " telescoping fails";
                if (!c.pair_count) why += " pair count fails";
                return why;
            });
        };
        for (unsigned d = 2; d <= 4; ++d)
            for (std::uint64_t n = 1; n <= sweep; ++n) record(n, d);
        auto rng = stream(opt, 5);
        std::uniform_int_distribution<std::uint64_t> pick_n(1, random_cap);
        std::uniform_int_distribution<unsigned> pick_d(2, 8);
        for (std::size_t i = 0; i < random_cases; ++i) {
            const std::uint64_t n = pick_n(rng);
            record(n, pick_d(rng));
        }
        return "n <= " + std::to_string(sweep) + " for d = 2,3,4 plus " + std::to_string(random_cases) +
               " random cases";
    });
}

CheckResult check_complete_dendrimer(const Options& opt) {
    return run(6, "complete dendrimer index", std::nullopt, opt, [](Tally& t) {
        for (unsigned d = 2; d <= 4; ++d) {
            for (unsigned k = 1; k <= 6; ++k) {
                const auto th = dendrimer::thresholds(d, k);
                const Int from_formula = dendrimer::complete_wiener_index(k, d);
                const Int from_poly =
                    derivative_at_one(dendrimer::closed_form(static_cast<std::uint64_t>(th.n_k - 1), d));
                t.expect(from_formula == from_poly, [&] {
                    return "k=" + std::to_string(k) + " d=" + std::to_string(d) + ": " + to_string(from_formula) +
                           " vs " + to_string(from_poly);
                });
            }
        }
        struct Known {
            unsigned k, d;
            Int value;
        };
        for (const Known& c : {Known{1, 2, 9}, Known{2, 2, 117}, Known{1, 3, 16}}) {
            const Int formula = dendrimer::complete_wiener_index(c.k, c.d);
            const auto th = dendrimer::thresholds(c.d, c.k);
            const Int oracle = wiener_index(dendrimer::build(static_cast<std::uint64_t>(th.n_k - 1), c.d));
            t.expect(formula == c.value && oracle == c.value, [&] {
                return "k=" + std::to_string(c.k) + " d=" + std::to_string(c.d) + ": formula " + to_string(formula) +
                       ", oracle " + to_string(oracle);
            });
        }
        return std::string();
    });
}

CheckResult check_generating_function(const Options& opt) {
    return run(7, "dendrimer generating function", 5.0, opt, [](Tally& t) {
        for (unsigned d = 2; d <= 4; ++d) {
            const auto series = dendrimer::gf_expand(d, 6);
            for (unsigned k = 0; k <= 6; ++k) {
                const auto th = dendrimer::thresholds(d, k);
                const Poly closed = dendrimer::closed_form(static_cast<std::uint64_t>(th.n_k - 1), d);
                t.expect(series[k] == closed, [&] {
                    return "d=" + std::to_string(d) + " k=" + std::to_string(k) + ": " + poly_text(series[k]) +
                           " vs " + poly_text(closed);
                });
            }
        }
        return std::string();
    });
}

CheckResult check_unimodality(const Options& opt) {
    return run(8, "dendrimer unimodality and turning coefficients", std::nullopt, opt, [&](Tally& t) {
        const std::uint64_t cap = full(opt) ? 2000 : 600;
        for (unsigned d = 2; d <= 4; ++d) {
            for (std::uint64_t n = 2; n <= cap; ++n) {
                std::string error;
                try {
                    dendrimer::unimodality_profile(n, d);
                } catch (const ProfileMismatch& e) {
                    error = e.what();
                }
                t.expect(error.empty(), [&] { return error; });
            }
        }
        for (unsigned d = 2; d <= 6; ++d) {
            for (unsigned k = 1; k <= 6; ++k) {
                const auto c = dendrimer::turning_coefficients(k, d);
                const Int d2k = checked_pow(d, 2 * k);
                const Int below = checked_mul(checked_mul(2, checked_pow(d, 2 * k - 1)), d + 1);
                t.expect(c.odd == 3 * d2k && c.even == 3 * d2k && c.below == below, [&] {
                    return "k=" + std::to_string(k) + " d=" + std::to_string(d) + ": " + to_string(c.below) + ", " +
                           to_string(c.odd) + ", " + to_string(c.even);
                });
            }
        }
        return "n <= " + std::to_string(cap);
    });
}

CheckResult check_tree_identities(const Options& opt) {
    return run(9, "tree identities and path maximality", std::nullopt, opt, [&](Tally& t) {
        auto rng = stream(opt, 9);
        const std::size_t count = full(opt) ? 500 : 100;
        const std::size_t enum_cap = full(opt) ? 9 : 8;
        std::uniform_int_distribution<std::size_t> pick_n(1, 200);
        for (std::size_t i = 0; i < count; ++i) {
            const Graph tree = trees::random_tree(pick_n(rng), rng);
            const Int oracle = wiener_index(tree);
            const Int cut = trees::wiener_edge_cut(tree);
            const Int gutman = trees::wiener_gutman(tree);
            t.expect(oracle == cut && oracle == gutman, [&] {
                return "n=" + std::to_string(tree.vertex_count()) + ": oracle " + to_string(oracle) + ", edge-cut " +
                       to_string(cut) + ", vertex " + to_string(gutman);
            });
        }
        for (std::size_t n = 2; n <= enum_cap; ++n) {
            const auto r = trees::path_is_max(n);
            t.expect(r.holds(), [&] { return "n=" + std::to_string(n) + ": max " + to_string(r.max_index); });
        }
        return std::to_string(count) + " random trees, exhaustive n <= " + std::to_string(enum_cap) + ", seed " +
               std::to_string(opt.seed);
    });
}

CheckResult check_coxeter(const Options& opt) {
    return run(10, "Coxeter reflection graphs and Poincare polynomials", 60.0, opt, [&](Tally& t) {
        const unsigned rank_cap = full(opt) ? 6 : 5;
        for (unsigned n = 2; n <= rank_cap; ++n) {
            t.expect(coxeter::verify_wgw(n), [&] { return "WGW fails for S_" + std::to_string(n); });
        }
        for (const auto& spec : coxeter::catalogue()) {
            const Poly p = coxeter::poincare_poly(spec);
            std::vector<Rational> expected;
            for (unsigned e : coxeter::exponents(spec)) expected.push_back(Rational::make(-1, e));
            std::sort(expected.begin(), expected.end());
            const auto roots = factor_negative_rational_roots(p);
            t.expect(roots && *roots == expected,
                     [&] { return coxeter::to_string(spec) + ": roots not recovered from " + poly_text(p); });
            const auto verdict = analyze_sequence(p, 0);
            t.expect(verdict.log_concave && verdict.unimodal,
                     [&] { return coxeter::to_string(spec) + ": not log-concave/unimodal"; });
        }
        return "S_2..S_" + std::to_string(rank_cap) + ", " + std::to_string(coxeter::catalogue().size()) +
               " table entries";
    });
}

namespace {

std::vector<std::pair<std::string, Graph>> load_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<std::pair<std::string, Graph>> out;
    if (!fs::is_directory(dir)) throw InvalidParameter("corpus directory '" + dir + "' not found");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".edges") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.emplace_back(f.filename().string(), read_edge_list_file(f.string()));
    return out;
}

bool three_connected(const Graph& g) {
    if (g.vertex_count() < 4 || !is_connected(g)) return false;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (local_connectivity(g, u, v) < 3) return false;
    return true;
}

}  // namespace

CheckResult check_wdistance(const Options& opt) {
    return run(11, "w-distance laws", 120.0, opt, [&](Tally& t) {
        auto rng = stream(opt, 11);
        const std::size_t count = full(opt) ? 100 : 30;
        for (std::size_t i = 0; i < count; ++i) {
            const Graph g = random_connected_graph(2, kMaxContainerVertices, 0.6, rng);
            const Poly w1 = w_wiener_poly(g, 1).poly;
            const Poly oracle = wiener_polynomial(g);
            t.expect(w1 == oracle, [&] { return "w=1 gives " + poly_text(w1) + " vs " + poly_text(oracle); });
            const Int pairs = binomial(static_cast<Int>(g.vertex_count()), 2);
            t.expect(w1.evaluate(1) == pairs, [&] { return "W_1(1) != C(n,2)"; });
        }
        for (std::size_t n = 3; n <= 12; ++n) {
            const Graph c = construct(FamilySpec::cycle(n));
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = u + 1; v < n; ++v) {
                    const std::size_t d = std::min<std::size_t>(v - u, n - (v - u));
                    const auto d2 = w_distance(c, u, v, 2);
                    t.expect(d2 && *d2 == n - d, [&] {
                        return "C_" + std::to_string(n) + " (" + std::to_string(u) + "," + std::to_string(v) + ")";
                    });
                }
            }
        }
        const std::string dir = opt.corpus_dir.empty() ? default_corpus_dir() : opt.corpus_dir;
        std::size_t used = 0;
        for (const auto& [name, g] : load_corpus(dir)) {
            if (g.vertex_count() > 10 || !three_connected(g)) continue;
            ++used;
            for (Vertex u = 0; u < g.vertex_count(); ++u) {
                for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
                    std::size_t previous = 0;
                    for (unsigned w = 1; w <= 3; ++w) {
                        const auto dw = w_distance(g, u, v, w);
                        t.expect(dw && *dw >= previous, [&] {
                            return name + " (" + std::to_string(u) + "," + std::to_string(v) + ") w=" +
                                   std::to_string(w);
                        });
                        if (dw) previous = *dw;
                    }
                }
            }
        }
        t.expect(used > 0, [&] { return "no 3-connected graphs with n <= 10 in " + dir; });
        return std::to_string(count) + " random graphs, " + std::to_string(used) + " corpus graphs";
    });
}

CheckResult check_properties(const Options& opt) {
    return run(12, "invariant property suite", 300.0, opt, [&](Tally& t) {
        auto rng = stream(opt, 12);
        const std::size_t count = full(opt) ? 300 : 100;
        for (std::size_t i = 0; i < count; ++i) {
            const Graph g = random_connected_graph(1, 64, 0.3, rng);
            const std::size_t n = g.vertex_count();
            const std::string label = "n=" + std::to_string(n) + " m=" + std::to_string(g.edge_count());
            const Poly w = wiener_polynomial(g);
            const Poly ordered = ordered_wiener(g);
            t.expect(ordered == add(scale(w, 2), Poly::constant(static_cast<Int>(n))),
                     [&] { return label + ": ordered != 2W + n"; });
            t.expect(w.evaluate(1) == binomial(static_cast<Int>(n), 2), [&] { return label + ": W(1) != C(n,2)"; });
            Poly relative_sum;
            for (Vertex v = 0; v < n; ++v) relative_sum = add(relative_sum, relative_wiener(g, v));
            t.expect(relative_sum == ordered, [&] { return label + ": sum of W_v != ordered"; });
            t.expect(verify_basic_properties(g).all(), [&] { return label + ": elementary properties"; });

            const DistanceMatrix dm = all_pairs_distances(g);
            bool metric = true;
            for (Vertex a = 0; a < n && metric; ++a) {
                if (dm.at(a, a) != 0) metric = false;
                for (Vertex b = 0; b < n && metric; ++b) {
                    if (dm.at(a, b) != dm.at(b, a)) metric = false;
                    for (Vertex c = 0; c < n && metric; ++c)
                        if (dm.at(a, c) > dm.at(a, b) + dm.at(b, c)) metric = false;
                }
            }
            t.expect(metric, [&] { return label + ": distance matrix is not a metric"; });

            if (n >= 2) {
                const auto verdict = analyze_sequence(w, 1);
                t.expect(!verdict.neg_rational_roots || verdict.log_concave,
                         [&] { return label + ": real roots without log-concavity"; });
                t.expect(!verdict.log_concave || verdict.unimodal,
                         [&] { return label + ": log-concave but not unimodal"; });
            }
        }
        // The same implication chain on the Poincare tables and dendrimer profiles.
        for (const auto& spec : coxeter::catalogue()) {
            const auto verdict = analyze_sequence(coxeter::poincare_poly(spec), 0);
            t.expect(verdict.neg_rational_roots.has_value() && verdict.log_concave && verdict.unimodal,
                     [&] { return coxeter::to_string(spec) + ": implication chain"; });
        }
        for (std::uint64_t n = 2; n <= 300; ++n) {
            const auto verdict = analyze_sequence(dendrimer::closed_form(n, 2), 1);
            t.expect(!verdict.neg_rational_roots || verdict.log_concave,
                     [&] { return "D_{" + std::to_string(n) + ",2}: roots without log-concavity"; });
            t.expect(!verdict.log_concave || verdict.unimodal,
                     [&] { return "D_{" + std::to_string(n) + ",2}: log-concave but not unimodal"; });
        }
        return std::to_string(count) + " random graphs, seed " + std::to_string(opt.seed);
    });
}

std::vector<Check> all_checks() {
    return {check_petersen,       check_family_sweep,        check_graph_ops,  check_grid,
            check_dendrimer_closed_form, check_complete_dendrimer, check_generating_function,
            check_unimodality,    check_tree_identities,     check_coxeter,    check_wdistance,
            check_properties};
}

std::vector<CheckResult> run_all(const Options& opt, const std::function<void(const CheckResult&)>& on_result) {
    std::vector<CheckResult> out;
    for (const auto& check : all_checks()) {
        out.push_back(check(opt));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string format_line(const CheckResult& r) {
    char timing[64];
    if (r.limit_seconds) {
        std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", r.seconds, *r.limit_seconds);
    } else {
        std::snprintf(timing, sizeof timing, "%.2fs", r.seconds);
    }
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << "  [" << (r.id < 10 ? " " : "") << r.id << "] " << r.title << " ("
       << timing << "): " << r.detail;
    return os.str();
}

}  // namespace wienerlab::verify
