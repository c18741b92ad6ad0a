// Command-line front end: reads a JSON job from a file or standard input,
// dispatches the computation, prints the JSON result on standard output.
// Exit codes: 0 success, 1 verification disagreement, 2 input error,
// 3 support/budget limit exceeded.

#include "jumploci/job.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"exact jump-locus computations over Laurent polynomial group rings"};
    std::string input_path = "-";
    jumploci::JobOptions opts;
    std::size_t max_support = jumploci::kDefaultMaxSupport;
    std::uint64_t budget = opts.budget;

    app.add_option("--input", input_path, "job JSON file ('-' for stdin)")
        ->capture_default_str();
    auto* ms = app.add_option("--max-support", max_support,
                              "largest support size eligible for partition enumeration");
    auto* bu = app.add_option("--budget", budget,
                              "largest number of homomorphisms a verification may enumerate");
    if (const char* env = std::getenv("JUMPLOCI_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1 && n <= 64) opts.threads = n;
    }
    app.add_option("--threads", opts.threads, "worker threads for box verification")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    auto* np = app.add_flag("--no-prune", "keep locus groups contained in other groups");

    CLI11_PARSE(app, argc, argv);

    if (ms->count() > 0) {
        opts.max_support = max_support;
        opts.max_support_forced = true;
    }
    if (bu->count() > 0) {
        opts.budget = budget;
        opts.budget_forced = true;
    }
    if (np->count() > 0) {
        opts.prune = false;
        opts.prune_forced = true;
    }

    std::string text;
    if (input_path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(input_path);
        if (!in) {
            std::cerr << "error: cannot open " << input_path << "\n";
            return 2;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }

    jumploci::json job;
    try {
        job = jumploci::json::parse(text);
    } catch (const jumploci::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const jumploci::JobOutcome outcome = jumploci::run_job(job, opts);
    if (!outcome.error.empty()) {
        std::cerr << "error: " << outcome.error << "\n";
    } else {
        std::cout << outcome.output.dump(2) << "\n";
    }
    return outcome.exit_code;
}
