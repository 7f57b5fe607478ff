#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "welch/verify.hpp"

namespace welch::cli {

using json = nlohmann::ordered_json;

enum class subcommand { solve, pairs, value_set, table, count_c, teichmuller, lift, verify };

struct command_request {
    subcommand cmd;
    i64 p = 0;
    int e = 1;
    i64 g = 0;
    std::optional<i64> c;
    std::optional<i64> x;
    std::optional<i64> x0;
    std::optional<std::pair<i64, i64>> x_range;
    std::string format = "text";  // json | csv | text
    std::optional<i64> max_modulus;  // instance bound (default 10^4); verify sweep bound (default 10^3)
    u64 seed = 1;
};

struct command_result {
    int exit_code;  // 0 ok / all-pass, 1 verification failure, 2 invalid input
    std::string output;
};

namespace detail {

inline json instance_json(const welch_instance& inst) {
    return json{{"p", inst.p()}, {"e", inst.e()}, {"g", inst.g.value}, {"m", inst.m}, {"ord_pe", inst.ord_pe}};
}

inline std::string render(const json& j, const std::string&) { return j.dump() + "\n"; }

inline welch_instance make_instance(const command_request& req) {
    if (req.p < 2 || !is_prime(req.p)) throw invalid_input("p must be prime");
    if (req.e < 1) throw invalid_input("e must be >= 1");
    prime_power_modulus mod(req.p, req.e);  // also guards overflow
    if (mod.value() > req.max_modulus.value_or(10'000))
        throw invalid_input("p^e exceeds the input bound (raise --max-modulus to override)");
    if (req.p == 2 && mod_floor(req.g, 2) == 0) throw even_g("g must be odd when p = 2");
    if (mod_floor(req.g, req.p) == 0) throw non_unit("g must be a unit modulo p");
    return welch_instance::create(req.p, req.e, req.g);
}

inline json report_json(const welch_instance& inst, const solution_report& rep, json query, bool pairs) {
    json solutions = json::array();
    for (const solution_pair& s : rep.solutions) {
        if (pairs)
            solutions.push_back(json::array({s.x, s.c}));
        else
            solutions.push_back(s.x);
    }
    return json{{"instance", instance_json(inst)}, {"query", std::move(query)},   {"solutions", std::move(solutions)},
                {"predicted_count", rep.predicted_count}, {"observed_count", rep.observed_count},
                {"theorem", rep.claim}};
}

inline command_result run_solve(const command_request& req) {
    welch_instance inst = make_instance(req);
    if (!req.c) throw invalid_input("solve requires --c");
    const i64 period = x_period(inst);
    i64 lo = 1, hi = period;
    if (req.x_range) {
        lo = req.x_range->first;
        hi = req.x_range->second;
        if (lo != 1 || hi < 1) throw invalid_input("--x-range must start at 1");
        if (!inst.mod.odd()) throw invalid_input("--x-range is only supported for odd p");
    }
    const bool canonical = hi % period == 0;
    const i64 k = canonical ? hi / period : hi / period + 1;
    solution_report rep = inst.mod.odd() ? solve_fixed_c(inst, *req.c, k) : solve_p2(inst, *req.c);
    if (!canonical) {
        // a partial trailing window: keep the x's inside it, drop the
        // theorem-predicted count (it only applies to whole periods)
        std::erase_if(rep.solutions, [hi](const solution_pair& s) { return s.x > hi; });
        rep.observed_count = static_cast<i64>(rep.solutions.size());
        rep.predicted_count = -1;
    }
    json query{{"type", rep.query}, {"c", *req.c}, {"x_range", json::array({lo, hi})}};
    json j = report_json(inst, rep, std::move(query), false);
    if (!canonical) j["predicted_count"] = nullptr;
    if (req.format == "csv") {
        std::ostringstream os;
        os << "x\n";
        for (const solution_pair& s : rep.solutions) os << s.x << "\n";
        return {0, os.str()};
    }
    if (req.format == "text") {
        std::ostringstream os;
        os << "g^(x-1+c) = x (mod " << inst.p() << "^" << inst.e() << "), g = " << inst.g.value << ", c = " << *req.c
           << "\nsolutions in {" << lo << ".." << hi << "}:";
        for (const solution_pair& s : rep.solutions) os << " " << s.x;
        if (canonical)
            os << "\npredicted " << rep.predicted_count << " (" << rep.predicted_formula << "), observed "
               << rep.observed_count << "\n";
        else
            os << "\nobserved " << rep.observed_count << " (no predicted count for a partial x-period)\n";
        return {0, os.str()};
    }
    return {0, render(j, req.format)};
}

inline command_result run_pairs(const command_request& req) {
    welch_instance inst = make_instance(req);
    solution_report rep = solve_all_pairs(inst);
    json query{{"type", rep.query},
               {"x_range", json::array({1, x_period(inst)})},
               {"c_range", json::array({1, c_period(inst)})}};
    if (req.format == "csv") {
        std::ostringstream os;
        os << "x,c\n";
        for (const solution_pair& s : rep.solutions) os << s.x << "," << s.c << "\n";
        return {0, os.str()};
    }
    if (req.format == "text") {
        std::ostringstream os;
        os << "solution pairs (x, c) for g = " << inst.g.value << " mod " << inst.p() << "^" << inst.e() << ":\n";
        for (const solution_pair& s : rep.solutions) os << "  (" << s.x << ", " << s.c << ")\n";
        os << "predicted " << rep.predicted_count << " (" << rep.predicted_formula << "), observed "
           << rep.observed_count << "\n";
        return {0, os.str()};
    }
    return {0, render(report_json(inst, rep, std::move(query), true), req.format)};
}

inline command_result run_value_set(const command_request& req) {
    welch_instance inst = make_instance(req);
    value_set vs = value_set_at_p(inst);
    json values = json::array();
    for (i64 v : vs.values) values.push_back(v);
    json j{{"instance", instance_json(inst)},
           {"query", json{{"type", "value-set"}, {"c_range", json::array({1, vs.generating_c_range})}}},
           {"values", std::move(values)},
           {"size", static_cast<i64>(vs.values.size())},
           {"theorem", "f(p, c) = g^c (mod p): the value set lists every x mod p with solutions"}};
    if (req.format == "csv") {
        std::ostringstream os;
        os << "value\n";
        for (i64 v : vs.values) os << v << "\n";
        return {0, os.str()};
    }
    if (req.format == "text") {
        std::ostringstream os;
        os << "value set of g = " << inst.g.value << " mod " << inst.p() << ":";
        for (i64 v : vs.values) os << " " << v;
        os << "\nsize " << vs.values.size() << " (= m)\n";
        return {0, os.str()};
    }
    return {0, render(j, req.format)};
}

inline command_result run_table(const command_request& req) {
    welch_instance inst = make_instance(req);
    i64 lo = 1, hi = inst.mod.value();
    if (req.x_range) {
        lo = req.x_range->first;
        hi = req.x_range->second;
        if (lo > hi) throw invalid_input("--x-range lo must not exceed hi");
    }
    const i64 cols = c_period(inst);
    if ((hi - lo + 1) * cols > oracle::scan_budget::from_env().max_grid)
        throw invalid_input("table exceeds the grid budget (WELCH_BUDGET)");
    if (req.format == "csv" || req.format == "text") {
        std::ostringstream os;
        const char* sep = req.format == "csv" ? "," : "\t";
        os << "x";
        for (i64 c = 1; c <= cols; ++c) os << sep << "c=" << c;
        os << "\n";
        for (i64 x = lo; x <= hi; ++x) {
            os << x;
            for (i64 c = 1; c <= cols; ++c) os << sep << welch_f(inst, x, c).value;
            os << "\n";
        }
        return {0, os.str()};
    }
    json rows = json::array();
    for (i64 x = lo; x <= hi; ++x) {
        json row = json::array();
        for (i64 c = 1; c <= cols; ++c) row.push_back(welch_f(inst, x, c).value);
        rows.push_back(json{{"x", x}, {"f", std::move(row)}});
    }
    json j{{"instance", instance_json(inst)},
           {"query", json{{"type", "table"}, {"x_range", json::array({lo, hi})}, {"c_range", json::array({1, cols})}}},
           {"rows", std::move(rows)},
           {"theorem", "the grid of f(x, c) = g^(x-1+c) - x (mod p^e)"}};
    return {0, render(j, req.format)};
}

inline command_result run_count_c(const command_request& req) {
    welch_instance inst = make_instance(req);
    if (!req.x) throw invalid_input("count-c requires --x");
    i64 count = count_c_for_fixed_x(inst, *req.x);
    std::vector<i64> cs = c_values_for_fixed_x(inst, *req.x);
    solution_report rep{"count-c",
                        {},
                        count,
                        count == 0 ? "0 (no discrete log)" : "m*p^(e-1)/ord_pe",
                        static_cast<i64>(cs.size()),
                        "the c count for fixed x is m*p^(e-1)/ord_{p^e}(g) or 0"};
    for (i64 c : cs) rep.solutions.push_back({*req.x, c});
    if (req.format == "csv") {
        std::ostringstream os;
        os << "c\n";
        for (i64 c : cs) os << c << "\n";
        return {0, os.str()};
    }
    if (req.format == "text") {
        std::ostringstream os;
        os << "c in {1.." << c_period(inst) << "} with g^(x-1+c) = x for x = " << *req.x << ":";
        for (i64 c : cs) os << " " << c;
        os << "\ncount " << cs.size() << " (predicted " << count << ")\n";
        return {0, os.str()};
    }
    json query{{"type", "count-c"}, {"x", *req.x}, {"c_range", json::array({1, c_period(inst)})}};
    json j = report_json(inst, rep, std::move(query), false);
    // for count-c the solutions array lists the c values
    json cjson = json::array();
    for (i64 c : cs) cjson.push_back(c);
    j["solutions"] = std::move(cjson);
    return {0, render(j, req.format)};
}

inline command_result run_teichmuller(const command_request& req) {
    welch_instance inst = make_instance(req);
    const unit_decomposition& d = inst.dec;
    json j{{"instance", instance_json(inst)},
           {"query", json{{"type", "teichmuller"}}},
           {"omega", d.omega.value},
           {"one_unit", d.one_unit.value},
           {"log_one_unit", inst.log_one_unit.value},
           {"precision", d.precision},
           {"theorem", "g = omega(g)*<g> with omega a root of unity and <g> a one-unit"}};
    if (req.format == "text" || req.format == "csv") {
        std::ostringstream os;
        os << "g = " << inst.g.value << " mod " << inst.p() << "^" << inst.e() << "\n"
           << "omega(g)   = " << d.omega.value << "\n"
           << "<g>        = " << d.one_unit.value << "\n"
           << "log<g>     = " << inst.log_one_unit.value << "\n";
        return {0, os.str()};
    }
    return {0, render(j, req.format)};
}

inline command_result run_lift(const command_request& req) {
    welch_instance inst = make_instance(req);
    if (!req.c) throw invalid_input("lift requires --c");
    if (!inst.mod.odd()) throw invalid_input("lift requires odd p (use solve for p = 2)");
    i64 x0 = req.x0.value_or(0);
    auto F = [&inst, x0, c = *req.c](i64 x, const prime_power_modulus& mk) {
        return interpolated_f(mod_floor(x0, inst.m), x, c, inst.dec.reduced(mk.e())).value;
    };
    lift_problem prob{
        inst.mod,
        [&F](i64 x, const prime_power_modulus& mk) { return mod_floor(F(x, mk) - x, mk.value()); },
        [&F, &inst](i64 x, const prime_power_modulus& mk) {
            i64 log_u = mod_floor(inst.log_one_unit.value, mk.value());
            return mod_floor(mul_mod(F(x, mk), log_u, mk.value()) - 1, mk.value());
        },
        pow_mod(inst.g.value, mod_floor(x0, inst.m), inst.p()),
    };
    lift_result lifted = lift_simple_root(prob);
    json trace = json::array();
    for (i64 t : lifted.trace) trace.push_back(t);
    json j{{"instance", instance_json(inst)},
           {"query", json{{"type", "lift"}, {"x0", x0}, {"c", *req.c}}},
           {"base_root", prob.base_root},
           {"root", lifted.root.value},
           {"trace", std::move(trace)},
           {"theorem", "the base root lifts to a unique root mod p^e (simple-root lifting)"}};
    if (req.format == "text" || req.format == "csv") {
        std::ostringstream os;
        os << "F(x) = omega^" << x0 << " <g>^(x-1+" << *req.c << ") - x, g = " << inst.g.value << " mod "
           << inst.p() << "^" << inst.e() << "\n"
           << "base root mod p: " << prob.base_root << "\n";
        for (size_t i = 0; i < lifted.trace.size(); ++i)
            os << "mod p^" << (i + 2) << ": " << lifted.trace[i] << "\n";
        os << "root mod p^e: " << lifted.root.value << "\n";
        return {0, os.str()};
    }
    return {0, render(j, req.format)};
}

inline command_result run_verify(const command_request& req) {
    verify::options opt;
    opt.max_modulus = req.max_modulus.value_or(1'000);
    opt.seed = req.seed;
    std::vector<verify::check_result> checks = verify::run_all(opt);
    bool all_pass = true;
    long long total_cases = 0;
    for (const verify::check_result& c : checks) {
        all_pass = all_pass && c.pass();
        total_cases += c.cases;
    }
    if (req.format == "json") {
        json arr = json::array();
        for (const verify::check_result& c : checks)
            arr.push_back(json{{"name", c.name},
                               {"claim", c.claim},
                               {"cases", c.cases},
                               {"violations", c.violations},
                               {"pass", c.pass()},
                               {"first_failure", c.first_failure}});
        json j{{"max_modulus", opt.max_modulus}, {"seed", opt.seed}, {"checks", std::move(arr)},
               {"total_cases", total_cases}, {"pass", all_pass}};
        return {all_pass ? 0 : 1, render(j, req.format)};
    }
    std::ostringstream os;
    for (const verify::check_result& c : checks) {
        const char* status = c.pass() ? (c.empty() ? "EMPTY" : "PASS") : "FAIL";
        os << status << " " << c.name << " (" << c.cases << " cases";
        if (c.violations > 0) os << ", " << c.violations << " violations, first: " << c.first_failure;
        os << ") -- " << c.claim << "\n";
    }
    os << (all_pass ? "VERIFY PASS" : "VERIFY FAIL") << " (" << checks.size() << " theorems, " << total_cases
       << " cases, max modulus " << opt.max_modulus << ")\n";
    return {all_pass ? 0 : 1, os.str()};
}

}  // namespace detail

// Dispatch a validated request.  InvalidInput and precondition violations
// surface as exit code 2 with a diagnostic naming the failed check.
inline command_result run(const command_request& req) {
    try {
        switch (req.cmd) {
            case subcommand::solve: return detail::run_solve(req);
            case subcommand::pairs: return detail::run_pairs(req);
            case subcommand::value_set: return detail::run_value_set(req);
            case subcommand::table: return detail::run_table(req);
            case subcommand::count_c: return detail::run_count_c(req);
            case subcommand::teichmuller: return detail::run_teichmuller(req);
            case subcommand::lift: return detail::run_lift(req);
            case subcommand::verify: return detail::run_verify(req);
        }
        return {2, "error: unknown subcommand\n"};
    } catch (const error& err) {
        return {2, std::string("error: ") + err.what() + "\n"};
    }
}

}  // namespace welch::cli
