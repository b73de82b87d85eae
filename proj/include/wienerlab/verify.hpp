#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wienerlab::verify {

enum class Budget { Small, Full };

Budget parse_budget(const std::string& text);
const char* budget_name(Budget budget);

struct Options {
    std::uint64_t seed = 42;
    Budget budget = Budget::Full;
    // Directory of *.edges files scanned by the w-distance monotonicity check.
    std::string corpus_dir;
};

// Directory compiled in as the default corpus location.
std::string default_corpus_dir();

struct CheckResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    std::optional<double> limit_seconds;
};

// One suite per acceptance criterion. Budget::Full runs the stated sizes,
// Budget::Small shrinks the sweeps for quick runs. A check passes when every
// comparison holds and, under Budget::Full, it finishes inside its time limit.
CheckResult check_petersen(const Options& opt);
CheckResult check_family_sweep(const Options& opt);
CheckResult check_graph_ops(const Options& opt);
CheckResult check_grid(const Options& opt);
CheckResult check_dendrimer_closed_form(const Options& opt);
CheckResult check_complete_dendrimer(const Options& opt);
CheckResult check_generating_function(const Options& opt);
CheckResult check_unimodality(const Options& opt);
CheckResult check_tree_identities(const Options& opt);
CheckResult check_coxeter(const Options& opt);
CheckResult check_wdistance(const Options& opt);
// Cross-module invariants on random graphs and the polynomial tables.
CheckResult check_properties(const Options& opt);

using Check = std::function<CheckResult(const Options&)>;

// Criteria 1..12 in order.
std::vector<Check> all_checks();

// Runs every check in order, calling `on_result` as each finishes.
std::vector<CheckResult> run_all(const Options& opt,
                                 const std::function<void(const CheckResult&)>& on_result = {});

std::string format_line(const CheckResult& r);

}  // namespace wienerlab::verify
