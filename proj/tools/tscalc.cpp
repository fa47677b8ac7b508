#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "ts/harness.hpp"
#include "ts/repl.hpp"

namespace
{

int exit_code(ts::ReplOutput::Status s)
{
    switch (s) {
    case ts::ReplOutput::Status::ok: return 0;
    case ts::ReplOutput::Status::user_error: return 1;
    case ts::ReplOutput::Status::internal_error: return 2;
    }
    return 2;
}

// Runs lines until :quit; returns the worst exit code seen.
int run_lines(ts::ReplState &state, std::istream &in, bool interactive)
{
    int worst = 0;
    std::string line;
    while (!state.quit) {
        if (interactive) {
            std::cout << "> " << std::flush;
        }
        if (!std::getline(in, line)) {
            break;
        }
        const ts::ReplOutput out = ts::repl_step(state, line);
        if (!out.text.empty()) {
            (out.status == ts::ReplOutput::Status::ok || interactive ? std::cout : std::cerr) << out.text << '\n';
        }
        if (!interactive) {
            worst = std::max(worst, exit_code(out.status));
        }
    }
    return worst;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"tscalc: exact transseries and surreal arithmetic"};
    unsigned budget = 8;
    std::vector<std::string> evals;
    std::string script;
    bool json = false;
    std::size_t check = 0;
    unsigned long long seed = 1;
    app.add_option("--budget", budget, "expansion budget for inexact operations")
        ->check(CLI::Range(1u, ts::max_budget));
    app.add_option("--eval", evals, "evaluate an expression or :command (repeatable)");
    app.add_option("--script", script, "run a file of REPL lines")->check(CLI::ExistingFile);
    app.add_flag("--json", json, "print series in the JSON interchange format");
    app.add_option("--check", check, "run N random derivation-axiom cases and print the report");
    app.add_option("--seed", seed, "seed for --check");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (check > 0) {
            ts::GenConfig config;
            config.seed = seed;
            const ts::CheckReport report = ts::check_axioms(config, check);
            std::cout << report.to_json().dump(2) << '\n';
            return report.ok() ? 0 : 1;
        }

        ts::ReplState state;
        state.budget = budget;
        state.json = json;
        int worst = 0;
        for (const std::string &e : evals) {
            const ts::ReplOutput out = ts::repl_step(state, e);
            if (!out.text.empty()) {
                (out.status == ts::ReplOutput::Status::ok ? std::cout : std::cerr) << out.text << '\n';
            }
            worst = std::max(worst, exit_code(out.status));
            if (state.quit) {
                return worst;
            }
        }
        if (!script.empty()) {
            std::ifstream in(script);
            worst = std::max(worst, run_lines(state, in, false));
        }
        if (evals.empty() && script.empty()) {
            worst = run_lines(state, std::cin, isatty(fileno(stdin)) != 0);
        }
        return worst;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
