#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "arithsite/bigcell.hpp"
#include "arithsite/eval.hpp"
#include "arithsite/grothendieck.hpp"
#include "arithsite/parser.hpp"
#include "arithsite/suites.hpp"

namespace {

using namespace arithsite;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

nlohmann::json report_json(const SuiteReport& report) {
    nlohmann::json laws = nlohmann::json::array();
    for (const auto& l : report.laws)
        laws.push_back({{"law", l.law},
                        {"cases", l.cases},
                        {"violations", l.violations},
                        {"counterexamples", l.counterexamples}});
    return {{"suite", report.suite},
            {"seed", report.seed},
            {"laws", laws},
            {"ok", report.ok()}};
}

nlohmann::json axiom_report_json(const AxiomCheckReport& report) {
    nlohmann::json stability = nlohmann::json::array();
    for (const auto& cx : report.stability)
        stability.push_back({{"member", cx.member.to_string()},
                             {"n", cx.n},
                             {"acted", cx.acted.to_string()}});
    nlohmann::json transitivity = nlohmann::json::array();
    for (const auto& cx : report.transitivity) {
        nlohmann::json orbit = nlohmann::json::array();
        for (const auto& s : cx.orbit) orbit.push_back(s.to_string());
        transitivity.push_back({{"candidate", cx.candidate.to_string()},
                                {"member", cx.member.to_string()},
                                {"orbit", orbit}});
    }
    return {{"axiom1", report.axiom1_holds},
            {"stability_cases", report.stability_cases},
            {"stability_violations", report.stability_violations},
            {"stability_counterexamples", stability},
            {"transitivity_cases", report.transitivity_cases},
            {"transitivity_violations", report.transitivity_violations},
            {"transitivity_counterexamples", transitivity},
            {"ok", report.ok()}};
}

int eval_lines(const std::vector<std::string>& lines, bool json) {
    Environment env;
    for (const std::string& line : lines) {
        if (line.empty()) continue;
        Statement st = parse_statement(line);
        Value v = eval(st.expr, env);
        if (!st.binding.empty()) {
            env[st.binding] = v;
            continue;
        }
        std::cout << (json ? v.to_json_record() : v.to_string()) << "\n";
    }
    return kExitOk;
}

int run_repl(bool json) {
    Environment env;
    std::string line;
    std::cerr << "arithsite repl; 'let name = expr' binds, :q quits\n";
    for (;;) {
        std::cerr << "> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        if (line == ":q" || line == ":quit") break;
        if (line.empty()) continue;
        try {
            Statement st = parse_statement(line);
            Value v = eval(st.expr, env);
            if (!st.binding.empty()) {
                env[st.binding] = v;
                std::cout << st.binding << " = " << v.to_string() << "\n";
            } else {
                std::cout << (json ? v.to_json_record() : v.to_string()) << "\n";
            }
        } catch (const Error& e) {
            std::cout << "error: " << e.what() << "\n";
        }
    }
    return kExitOk;
}

std::vector<std::string> read_stdin_lines() {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line)) lines.push_back(line);
    return lines;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "arithsite: exact calculator for the Heyting algebra of sieves on the\n"
        "multiplicative monoid of positive integers, its supernatural points,\n"
        "topologies, sheaf sections/stalks, and the skew lattice of\n"
        "constructible truth fluctuations"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "emit machine-readable JSON");

    auto* cmd_eval = app.add_subcommand("eval", "evaluate expressions (or stdin lines)");
    std::vector<std::string> exprs;
    cmd_eval->add_option("expr", exprs, "expressions to evaluate");

    app.add_subcommand("repl", "interactive session with let-bindings");

    auto* cmd_check = app.add_subcommand("check", "run a property suite or a gp axiom check");
    std::string suite;
    cmd_check->add_option("suite", suite, "suite name, or 'gp'")->required();
    SuiteBudget budget;
    cmd_check->add_option("--cases", budget.cases, "cases per law (0 = suite default)");
    cmd_check->add_option("--seed", budget.seed, "random seed");
    cmd_check->add_option("--max-gen", budget.max_generators, "max generators per sieve");
    cmd_check->add_option("--max-val", budget.max_value, "max generator value");
    cmd_check->add_option("--max-primes", budget.prime_budget,
                          "enumeration budget for the constructible decision procedure");
    std::vector<std::uint64_t> gp_primes;
    cmd_check->add_option("--primes", gp_primes, "primes for 'check gp'")->delimiter(',');

    auto* cmd_stalk = app.add_subcommand("stalk", "stalk of the pushforward sheaf at a point");
    std::vector<std::string> stalk_args;
    cmd_stalk->add_option("args", stalk_args, "i|j and a point literal")->expected(-1);

    auto* cmd_sections =
        app.add_subcommand("sections", "sections of the pushforward sheaf over a basic open");
    std::vector<std::string> sections_args;
    cmd_sections->add_option("args", sections_args, "i|j and an open literal")->expected(-1);

    auto* cmd_hyper = app.add_subcommand("hyperdistance", "distance between two lattices");
    std::vector<std::string> hyper_args;
    cmd_hyper->add_option("lattices", hyper_args, "two lattice pairs, e.g. '(2, 0)' '(1, 1/2)'")
        ->expected(-1);

    auto* cmd_bigcell = app.add_subcommand("bigcell", "big cell graph queries");
    auto* cmd_neighbors =
        cmd_bigcell->add_subcommand("neighbors", "integer lattices at prime hyperdistance");
    std::uint64_t neighbors_m = 1, neighbors_bound = 50;
    cmd_neighbors->add_option("m", neighbors_m, "lattice index")->required();
    cmd_neighbors->add_option("--bound", neighbors_bound, "search bound");

    auto* cmd_divisors = app.add_subcommand("divisors", "truncated divisor set of a supernatural");
    std::string divisors_literal;
    std::uint64_t divisors_bound = 100;
    bool check_point = false;
    cmd_divisors->add_option("literal", divisors_literal, "supernatural literal")->required();
    cmd_divisors->add_option("--bound", divisors_bound, "truncation bound");
    cmd_divisors->add_flag("--check-point", check_point,
                           "verify divisor/lcm closure of the result");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_eval->parsed()) {
            return eval_lines(exprs.empty() ? read_stdin_lines() : exprs, json);
        }
        if (app.get_subcommand("repl")->parsed()) {
            return run_repl(json);
        }
        if (cmd_check->parsed()) {
            if (suite == "gp") {
                AxiomCheckBudget b;
                if (budget.cases) b.cases = *budget.cases;
                b.seed = budget.seed;
                if (budget.max_generators) b.max_generators = budget.max_generators;
                if (budget.max_value) b.max_value = budget.max_value;
                AxiomCheckReport report = axiom_check(FamilySpec::gp(gp_primes), b);
                if (json)
                    std::cout << axiom_report_json(report).dump(2) << "\n";
                else
                    std::cout << report.to_string();
                return report.ok() ? kExitOk : kExitViolation;
            }
            auto id = suite_from_name(suite);
            if (!id) {
                std::cerr << "unknown suite '" << suite << "'; available:";
                for (const auto& n : suite_names()) std::cerr << " " << n;
                std::cerr << " gp\n";
                return kExitUsage;
            }
            SuiteReport report = run_suite(*id, budget);
            if (json)
                std::cout << report_json(report).dump(2) << "\n";
            else
                std::cout << report.to_string();
            return report.ok() ? kExitOk : kExitViolation;
        }
        if (cmd_stalk->parsed() || cmd_sections->parsed()) {
            const auto& args = cmd_stalk->parsed() ? stalk_args : sections_args;
            std::string text = cmd_stalk->parsed() ? "stalk" : "sections";
            for (const auto& a : args) text += " " + a;
            Value v = eval(parse(text));
            std::cout << (json ? v.to_json_record() : v.to_string()) << "\n";
            return kExitOk;
        }
        if (cmd_hyper->parsed()) {
            // Accept both quoted pairs and shell-split fragments: rejoin and
            // separate the two parenthesized pairs with a comma.
            std::string joined;
            for (const auto& a : hyper_args) {
                if (!joined.empty()) joined += " ";
                joined += a;
            }
            std::size_t split = joined.find(") (");
            if (split != std::string::npos) joined.insert(split + 1, ",");
            Value v = eval(parse("hyperdistance(" + joined + ")"));
            std::cout << (json ? v.to_json_record() : v.to_string()) << "\n";
            return kExitOk;
        }
        if (cmd_neighbors->parsed()) {
            std::vector<std::uint64_t> ns = bigcell_neighbors(neighbors_m, neighbors_bound);
            if (json) {
                std::cout << nlohmann::json(ns).dump() << "\n";
            } else {
                for (std::size_t i = 0; i < ns.size(); ++i)
                    std::cout << ns[i] << (i + 1 < ns.size() ? " " : "");
                std::cout << "\n";
            }
            return kExitOk;
        }
        if (cmd_divisors->parsed()) {
            Value v = eval(parse(divisors_literal));
            if (v.sort() != Sort::Supernatural) {
                std::cerr << "divisors expects a supernatural literal\n";
                return kExitUsage;
            }
            DivisorTruncation t =
                divisor_truncation(std::get<Supernatural>(v.data), divisors_bound);
            bool point = !check_point || is_point_truncation(t);
            if (json) {
                nlohmann::json out = {{"bound", t.bound}, {"members", t.members}};
                if (check_point) out["is_point_truncation"] = point;
                std::cout << out.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < t.members.size(); ++i)
                    std::cout << t.members[i] << (i + 1 < t.members.size() ? " " : "");
                std::cout << "\n";
                if (check_point)
                    std::cout << (point ? "divisor/lcm closed\n" : "NOT divisor/lcm closed\n");
            }
            return point ? kExitOk : kExitViolation;
        }
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SortError& e) {
        std::cerr << "sort error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
