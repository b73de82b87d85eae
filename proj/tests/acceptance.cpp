// Runs acceptance criteria 1..12 at full size, one line per criterion.
// Criterion 12 also runs the CLI's "verify-all --budget small" end to end.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "wienerlab/verify.hpp"

namespace {

using namespace wienerlab::verify;

void add_small_suite_run(CheckResult& r, const Options& opt) {
    std::ostringstream out, err;
    const auto start = std::chrono::steady_clock::now();
    const int status = wienerlab::cli::run({"verify-all", "--budget", "small", "--seed", std::to_string(opt.seed),
                                            "--corpus", opt.corpus_dir},
                                           out, err);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.seconds += secs;
    const bool ok = status == 0 && secs < 300.0;
    if (!ok) r.passed = false;
    std::ostringstream note;
    note << "; verify-all --budget small " << (ok ? "green" : "FAILED") << " in " << secs << "s";
    if (status != 0) note << " (exit " << status << ")\n" << out.str() << err.str();
    r.detail += note.str();
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    opt.budget = Budget::Full;
    opt.corpus_dir = default_corpus_dir();
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) opt.seed = std::strtoull(argv[++i], nullptr, 10);
        else if (arg == "--corpus" && i + 1 < argc) opt.corpus_dir = argv[++i];
        else if (arg == "--small") opt.budget = Budget::Small;
        else {
            std::cerr << "usage: acceptance [--seed N] [--corpus DIR] [--small]\n";
            return 2;
        }
    }
    int failed = 0;
    run_all(opt, [&](const CheckResult& result) {
        CheckResult r = result;
        if (r.id == 12) add_small_suite_run(r, opt);
        if (!r.passed) ++failed;
        std::cout << format_line(r) << std::endl;
    });
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
