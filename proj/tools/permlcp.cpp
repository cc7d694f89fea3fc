// permlcp: longest common patterns, decomposition trees and pattern checks.
//
// Exit status: 0 ok / predicate true, 1 predicate false, 2 input error,
// 3 algorithm precondition not met.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "permlcp/permlcp.hpp"

namespace {

using nlohmann::ordered_json;
using namespace permlcp;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

struct GlobalFlags {
    std::string output = "text";
    bool quiet = false;
};

void warn(const GlobalFlags& g, const std::string& msg) {
    if (!g.quiet) std::cerr << "warning: " << msg << '\n';
}

int cmd_lcp(const GlobalFlags& g, const std::string& sigma_text, const std::string& tau_text, const std::string& algo_name,
            bool canonical) {
    const Permutation sigma = parse_permutation(sigma_text);
    const Permutation tau = parse_permutation(tau_text);
    const auto algo = parse_algorithm(algo_name);
    if (!algo) throw CLI::ValidationError("--algo", "unknown algorithm '" + algo_name + "'");

    const LcpPlan plan = plan_lcp(sigma, tau, *algo);
    if (plan.guide_tree) {
        const auto& other = plan.guide == Guide::tau ? sigma : tau;
        if (auto msg = complexity_warning(*plan.guide_tree, other.size())) warn(g, *msg);
    }
    LcpOptions options;
    options.canonical = canonical;
    const LcpResult r = run_lcp(plan, sigma, tau, options);

    if (g.output == "json") {
        ordered_json j;
        j["pattern"] = r.pattern.values();
        j["length"] = r.pattern.size();
        j["occ_sigma"] = r.occ_sigma.positions();
        j["occ_tau"] = r.occ_tau.positions();
        j["algorithm"] = std::string(to_string(r.algorithm));
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "pattern: " << r.pattern.to_string() << '\n'
                  << "length: " << r.pattern.size() << '\n'
                  << "occ_sigma: " << r.occ_sigma.to_string() << '\n'
                  << "occ_tau: " << r.occ_tau.to_string() << '\n'
                  << "algorithm: " << to_string(r.algorithm) << '\n';
    }
    return kExitOk;
}

int cmd_tree(const GlobalFlags& g, const std::string& sigma_text, const std::string& kind, std::string format) {
    const Permutation sigma = parse_permutation(sigma_text);
    DecompTree tree = decomposition_tree(sigma);
    if (kind == "expanded") tree = expand_tree(tree);
    if (format.empty()) format = g.output == "json" ? "json" : "text";

    if (format == "dot")
        std::cout << to_dot(tree);
    else if (format == "json")
        std::cout << to_json(tree).dump() << '\n';
    else
        std::cout << to_text(tree);
    return kExitOk;
}

int cmd_check(const GlobalFlags& g, const std::string& sigma_text, bool separable) {
    const Permutation sigma = parse_permutation(sigma_text);
    ordered_json j;
    bool holds = true;
    std::string witness_text;

    if (separable) {
        j["property"] = "separable";
        holds = is_separable(sigma);
        if (!holds) {
            for (const Pattern& forbidden : {Pattern{3, 1, 4, 2}, Pattern{2, 4, 1, 3}}) {
                if (auto occ = find_occurrence(sigma, forbidden)) {
                    const auto values = extract(sigma.values(), *occ);
                    j["witness"] = {{"pattern", forbidden.values()}, {"positions", occ->positions()}, {"values", values}};
                    witness_text = "occurrence of " + forbidden.to_string() + " at positions " + occ->to_string() +
                                   " (values " + detail::join(values) + ")";
                    break;
                }
            }
        }
    } else {
        j["property"] = "simple";
        holds = is_simple(sigma);
        if (!holds) {
            const int n = static_cast<int>(sigma.size());
            const IntervalSpan span = proper_common_interval(sigma).value_or(IntervalSpan{1, n});
            j["witness"] = {{"span", {span.lo, span.hi}}};
            witness_text = "common interval at positions " + std::to_string(span.lo) + ".." + std::to_string(span.hi);
            if (n < 4) witness_text += " (size below 4)";
        }
    }
    j["holds"] = holds;

    if (!g.quiet) {
        if (g.output == "json") {
            std::cout << j.dump() << '\n';
        } else {
            std::cout << j["property"].get<std::string>() << ": " << (holds ? "yes" : "no") << '\n';
            if (!holds) std::cout << "witness: " << witness_text << '\n';
        }
    }
    return holds ? kExitOk : kExitFalse;
}

int cmd_contains(const GlobalFlags& g, const std::string& pattern_text, const std::string& sigma_text) {
    const Permutation pattern = parse_permutation(pattern_text);
    const Permutation sigma = parse_permutation(sigma_text);

    const LcpPlan plan = plan_lcp(pattern, sigma, Algorithm::automatic);
    if (auto msg = complexity_warning(*plan.guide_tree, plan.guide == Guide::tau ? pattern.size() : sigma.size()))
        warn(g, *msg);
    const LcpResult r = run_lcp(plan, pattern, sigma);
    const bool holds = r.pattern.size() == pattern.size();

    if (!g.quiet) {
        if (g.output == "json") {
            ordered_json j;
            j["contains"] = holds;
            j["pattern"] = pattern.values();
            if (holds) {
                j["occurrence"] = r.occ_tau.positions();
                j["values"] = extract(sigma.values(), r.occ_tau);
            }
            j["lcp_length"] = r.pattern.size();
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "contains: " << (holds ? "yes" : "no") << '\n';
            if (holds)
                std::cout << "occurrence: " << r.occ_tau.to_string() << " (values "
                          << detail::join(extract(sigma.values(), r.occ_tau)) << ")\n";
            else
                std::cout << "longest common pattern length: " << r.pattern.size() << '\n';
        }
    }
    return holds ? kExitOk : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Longest common patterns between permutations"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("-o,--output", g.output, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--quiet", g.quiet, "Suppress diagnostics (and report output for check/contains)");

    std::string sigma, tau, pattern;

    auto* lcp_cmd = app.add_subcommand("lcp", "Longest common pattern of two permutations");
    std::string algo = "auto";
    bool canonical = false;
    lcp_cmd->add_option("sigma", sigma, "First permutation")->required();
    lcp_cmd->add_option("tau", tau, "Second permutation")->required();
    lcp_cmd->add_option("--algo", algo, "auto|separable|general|oracle")
        ->check(CLI::IsMember({"auto", "separable", "general", "oracle"}));
    lcp_cmd->add_flag("--canonical", canonical, "Lexicographically smallest longest pattern at every cell");

    auto* tree_cmd = app.add_subcommand("tree", "Decomposition tree of a permutation");
    std::string kind = "labeled", format;
    tree_cmd->add_option("sigma", sigma, "Permutation")->required();
    tree_cmd->add_option("--kind", kind, "labeled|expanded")->check(CLI::IsMember({"labeled", "expanded"}));
    tree_cmd->add_option("--format", format, "text|dot|json")->check(CLI::IsMember({"text", "dot", "json"}));

    auto* check_cmd = app.add_subcommand("check", "Test a permutation for separability or simplicity");
    bool separable = false, simple = false;
    check_cmd->add_option("sigma", sigma, "Permutation")->required();
    auto* property = check_cmd->add_option_group("property", "Which predicate to test");
    property->add_flag("--separable", separable, "Avoids 3 1 4 2 and 2 4 1 3");
    property->add_flag("--simple", simple, "Only trivial common intervals");
    property->require_option(1);

    auto* contains_cmd = app.add_subcommand("contains", "Does a permutation contain a pattern");
    contains_cmd->add_option("pattern", pattern, "Pattern")->required();
    contains_cmd->add_option("sigma", sigma, "Host permutation")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (lcp_cmd->parsed()) return cmd_lcp(g, sigma, tau, algo, canonical);
        if (tree_cmd->parsed()) return cmd_tree(g, sigma, kind, format);
        if (check_cmd->parsed()) return cmd_check(g, sigma, separable);
        if (contains_cmd->parsed()) return cmd_contains(g, pattern, sigma);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const NotSeparableError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const OracleLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
