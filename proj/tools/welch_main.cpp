#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "welch/cli.hpp"

namespace {

// "lo:hi" -> pair
bool parse_range(const std::string& s, std::pair<welch::i64, welch::i64>& out) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return false;
    try {
        out.first = std::stoll(s.substr(0, colon));
        out.second = std::stoll(s.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed points of x -> g^(x-1+c) over Z/p^eZ: solvers, tables, value sets, theorem verification"};
    app.require_subcommand(1);

    welch::cli::command_request req;
    std::string range_str;

    auto add_instance_flags = [&](CLI::App* sub, bool need_instance) {
        if (need_instance) {
            sub->add_option("--p", req.p, "prime p")->required();
            sub->add_option("--g", req.g, "the base g (a unit mod p)")->required();
            sub->add_option("--e", req.e, "exponent e of the modulus p^e");
        }
        sub->add_option("--format", req.format, "output format: json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--max-modulus", req.max_modulus, "input bound on p^e (verify: sweep bound)");
        sub->add_option("--seed", req.seed, "seed for sampled checks");
    };

    CLI::App* solve = app.add_subcommand("solve", "solutions x of g^(x-1+c) = x (mod p^e) for fixed c");
    add_instance_flags(solve, true);
    solve->add_option("--c", req.c, "the shift c")->required();
    solve->add_option("--x-range", range_str, "override range as 1:k*m*p^e");

    CLI::App* pairs = app.add_subcommand("pairs", "all solution pairs (x, c) on the canonical grid");
    add_instance_flags(pairs, true);

    CLI::App* value_set = app.add_subcommand("value-set", "the value set {f(p, c) mod p : 1 <= c <= m}");
    add_instance_flags(value_set, true);

    CLI::App* table = app.add_subcommand("table", "the grid of f(x, c) values");
    add_instance_flags(table, true);
    table->add_option("--x-range", range_str, "rows, default 1:p^e");

    CLI::App* count_c = app.add_subcommand("count-c", "how many c solve the equation for a fixed x");
    add_instance_flags(count_c, true);
    count_c->add_option("--x", req.x, "the fixed x")->required();

    CLI::App* teich = app.add_subcommand("teichmuller", "the decomposition g = omega(g)*<g> mod p^e");
    add_instance_flags(teich, true);

    CLI::App* lift = app.add_subcommand("lift", "lift the fixed point of one interpolation class, with trace");
    add_instance_flags(lift, true);
    lift->add_option("--c", req.c, "the shift c")->required();
    lift->add_option("--x0", req.x0, "exponent class mod m (default 0)");

    CLI::App* verify = app.add_subcommand("verify", "run every implemented theorem over a sweep");
    add_instance_flags(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err);  // --help
        app.exit(err);
        return 2;
    }

    if (!range_str.empty()) {
        std::pair<welch::i64, welch::i64> range;
        if (!parse_range(range_str, range)) {
            std::fprintf(stderr, "error: --x-range expects lo:hi\n");
            return 2;
        }
        req.x_range = range;
    }

    if (solve->parsed()) req.cmd = welch::cli::subcommand::solve;
    if (pairs->parsed()) req.cmd = welch::cli::subcommand::pairs;
    if (value_set->parsed()) req.cmd = welch::cli::subcommand::value_set;
    if (table->parsed()) req.cmd = welch::cli::subcommand::table;
    if (count_c->parsed()) req.cmd = welch::cli::subcommand::count_c;
    if (teich->parsed()) req.cmd = welch::cli::subcommand::teichmuller;
    if (lift->parsed()) req.cmd = welch::cli::subcommand::lift;
    if (verify->parsed()) req.cmd = welch::cli::subcommand::verify;

    welch::cli::command_result result = welch::cli::run(req);
    if (result.exit_code == 2)
        std::fputs(result.output.c_str(), stderr);
    else
        std::fputs(result.output.c_str(), stdout);
    return result.exit_code;
}
