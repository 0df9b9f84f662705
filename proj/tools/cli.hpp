#pragma once

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "knodeldom/knodeldom.hpp"

namespace knodeldom::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_io = 1,
    exit_usage = 2,
    exit_domain = 3,
    exit_resource = 4,
    exit_verification_failed = 5,
};

inline bool guard_override_from_env()
{
    const char* v = std::getenv("KNODELDOM_GUARD_OVERRIDE");
    return v != nullptr && std::string(v) == "1";
}

struct Outcome {
    RunReport report;
    int code = exit_ok;
};

inline void emit(const Outcome& o, bool json, const std::string& text, std::ostream& out)
{
    if (json)
        out << to_json(o.report).dump(2) << '\n';
    else
        out << text;
}

inline Strategy parse_strategy(const std::string& s)
{
    if (s == "pruned")
        return Strategy::Pruned;
    if (s == "exhaustive")
        return Strategy::Exhaustive;
    throw ParseError("unknown strategy '" + s + "'");
}

inline DominationKind parse_kind(const std::string& s)
{
    if (s == "total")
        return DominationKind::TotalDominating;
    if (s == "dominating")
        return DominationKind::Dominating;
    throw ParseError("unknown domination kind '" + s + "'");
}

/// Runs the knodeldom command line. Output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Knödel graph structure checks and exact total domination"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1);

    std::int64_t delta = 3;
    std::int64_t n = 0;
    std::int64_t n_min = 8;
    std::int64_t n_max = 0;
    std::string format = "edgelist";
    std::string output;
    std::string set_text;
    std::string kind_text = "total";
    std::string strategy_text = "pruned";
    bool json = false;
    bool exhaustive = false;
    bool solve_rows = false;
    bool certify = false;
    bool generic_bound = false;
    std::uint64_t seed = default_seed;
    std::uint64_t samples = 10000;
    std::uint64_t max_nodes = 0;
    unsigned threads = 1;
    std::optional<std::int64_t> lemma_delta;

    auto* gen = app.add_subcommand("gen", "write the edge set of W_{delta,n}");
    gen->add_option("--delta", delta, "regularity")->required();
    gen->add_option("--n", n, "order (even)")->required();
    gen->add_option("--format", format, "edgelist | dimacs | json")->capture_default_str();
    gen->add_option("--output,-o", output, "file to write instead of stdout");

    auto* construct = app.add_subcommand("construct", "explicit optimal total dominating set of W_{3,n}");
    construct->add_option("--n", n, "order (even, >= 8)")->required();
    construct->add_option("--delta", delta, "must be 3")->capture_default_str();
    construct->add_flag("--json", json, "emit a JSON run report");

    auto* verify = app.add_subcommand("verify", "check a vertex set for (total) domination");
    verify->add_option("--delta", delta, "regularity")->capture_default_str();
    verify->add_option("--n", n, "order (even)")->required();
    verify->add_option("--set", set_text, "vertices, e.g. \"u1,u2,v1,v2\"")->required();
    verify->add_option("--kind", kind_text, "total | dominating")->capture_default_str();
    verify->add_flag("--json", json, "emit a JSON run report");

    auto* solve = app.add_subcommand("solve", "exact minimum (total) dominating set");
    solve->add_option("--delta", delta, "regularity")->capture_default_str();
    solve->add_option("--n", n, "order (even)")->required();
    solve->add_option("--strategy", strategy_text, "pruned | exhaustive")->capture_default_str();
    solve->add_option("--kind", kind_text, "total | dominating")->capture_default_str();
    solve->add_option("--max-nodes", max_nodes, "search node limit (0 = unlimited)")->capture_default_str();
    solve->add_option("--threads", threads, "worker count")->capture_default_str()->check(CLI::Range(1u, 1024u));
    solve->add_flag("--certify", certify, "delta = 3: accept the construction when it meets 2*ceil(n/5)");
    solve->add_flag("--generic-bound", generic_bound, "start each side at ceil((n/2)/delta) instead of ceil(n/5)");
    solve->add_flag("--json", json, "emit a JSON run report");
    solve->add_option("--seed", seed, "unused; accepted for uniformity")->capture_default_str();

    auto* table = app.add_subcommand("table", "gamma_t table for even n in [n-min, n-max]");
    table->add_option("--n-min", n_min, "smallest even n >= 8")->required();
    table->add_option("--n-max", n_max, "largest even n")->required();
    table->add_flag("--solve", solve_rows, "add searched optimum where the pruned guard allows");
    table->add_flag("--json", json, "emit a JSON run report");

    auto* lemmas = app.add_subcommand("check-lemmas", "verify the structural lemmas computationally");
    lemmas->add_option("--delta", lemma_delta, "restrict to one delta (default: all valid)");
    lemmas->add_option("--n-min", n_min, "smallest even n")->default_val(2);
    lemmas->add_option("--n-max", n_max, "largest even n")->default_val(128);
    lemmas->add_flag("--exhaustive", exhaustive, "enumerate pairs, triples and small subsets");
    lemmas->add_option("--samples", samples, "random samples")->capture_default_str();
    lemmas->add_option("--seed", seed, "random seed")->capture_default_str();
    lemmas->add_flag("--json", json, "emit a JSON run report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const bool lift_guard = guard_override_from_env();
    Outcome o;
    std::ostringstream text;

    try {
        if (*gen) {
            o.report.command = "gen";
            const KnodelGraph g(delta, n);
            const GraphFormat f = parse_graph_format(format);
            if (output.empty()) {
                write_graph(g, f, out);
            } else {
                std::ofstream file(output);
                if (!file) {
                    err << "error: cannot write " << output << '\n';
                    return exit_io;
                }
                write_graph(g, f, file);
                if (!file) {
                    err << "error: write to " << output << " failed\n";
                    return exit_io;
                }
            }
            return exit_ok;
        }

        if (*construct) {
            o.report.command = "construct";
            o.report.parameters = {{"n", n}, {"delta", delta}};
            if (delta != 3)
                throw OutOfDomain("the explicit construction exists for delta = 3 only");
            const KnodelGraph g(3, n);
            const VertexSet d = construct_optimal_tds(n);
            const DominationReport r = is_total_dominating(g, d);
            const std::int64_t formula = gamma_t_formula(n);
            const bool ok = r.holds && static_cast<std::int64_t>(d.size()) == formula;
            o.report.result = {{"set", to_json(d)},
                               {"size", d.size()},
                               {"gamma_t_formula", formula},
                               {"counting_bound", counting_lower_bound(n)},
                               {"verification", to_json(r)}};
            o.code = ok ? exit_ok : exit_verification_failed;
            text << "W_{3," << n << "} construction (" << d.size() << " vertices, gamma_t = " << formula
                 << "): " << format_vertex_set(d) << '\n'
                 << (ok ? "verified total dominating\n" : "VERIFICATION FAILED\n");
        }

        if (*verify) {
            o.report.command = "verify";
            const DominationKind kind = parse_kind(kind_text);
            o.report.parameters = {{"delta", delta}, {"n", n}, {"set", set_text}, {"kind", to_string(kind)}};
            const KnodelGraph g(delta, n);
            const VertexSet d = parse_vertex_set(set_text);
            const DominationReport r = check_domination(g, d, kind);
            o.report.result = to_json(r);
            o.code = r.holds ? exit_ok : exit_verification_failed;
            text << (r.holds ? "PASS" : "FAIL") << ": {" << format_vertex_set(d) << "} is "
                 << (r.holds ? "" : "not ") << to_string(kind) << " in W_{" << delta << "," << n << "}\n";
            if (!r.holds)
                text << "uncovered: " << format_vertex_set(r.uncovered) << '\n';
        }

        if (*solve) {
            o.report.command = "solve";
            const DominationKind kind = parse_kind(kind_text);
            SolveOptions opt{.strategy = parse_strategy(strategy_text),
                             .max_nodes = max_nodes,
                             .threads = threads,
                             .lift_guard = lift_guard,
                             .use_counting_bound = !generic_bound,
                             .certify_by_construction = certify};
            o.report.parameters = {{"delta", delta},         {"n", n},
                                   {"kind", to_string(kind)}, {"strategy", to_string(opt.strategy)},
                                   {"max_nodes", max_nodes},  {"threads", threads},
                                   {"certify", certify},      {"generic_bound", generic_bound}};
            const KnodelGraph g(delta, n);
            const SolveResult r = kind == DominationKind::TotalDominating ? solve_min_total_dominating(g, opt)
                                                                          : solve_min_dominating(g, opt);
            o.report.result = to_json(r);
            text << (kind == DominationKind::TotalDominating ? "gamma_t" : "gamma") << "(W_{" << delta << ","
                 << n << "}) = " << r.optimum << "\nwitness: " << format_vertex_set(r.witness)
                 << "\ncertificate: " << to_string(r.certificate) << "\nnodes: " << r.nodes_explored
                 << "\nelapsed_us: " << r.elapsed.count() << '\n';
        }

        if (*table) {
            o.report.command = "table";
            o.report.parameters = {{"n_min", n_min}, {"n_max", n_max}, {"solve", solve_rows}};
            SolveOptions opt{.lift_guard = lift_guard};
            const auto rows = gamma_t_table(n_min, n_max, solve_rows, opt);
            nlohmann::json arr = nlohmann::json::array();
            bool ok = true;
            for (const auto& r : rows) {
                arr.push_back(to_json(r));
                ok = ok && r.construction_verified && r.formula == r.counting_bound &&
                     r.construction_size == r.formula && (!r.solver_optimum || *r.solver_optimum == r.formula);
            }
            o.report.result = {{"rows", arr}, {"consistent", ok}};
            o.code = ok ? exit_ok : exit_verification_failed;
            write_table(rows, text);
        }

        if (*lemmas) {
            o.report.command = "check-lemmas";
            LemmaSuiteOptions opt{.delta = lemma_delta,
                                  .n_min = n_min,
                                  .n_max = n_max,
                                  .exhaustive = exhaustive,
                                  .samples = samples,
                                  .seed = seed,
                                  .lift_guard = lift_guard};
            o.report.parameters = {{"n_min", n_min}, {"n_max", n_max}, {"exhaustive", exhaustive},
                                   {"samples", samples}, {"seed", seed}};
            o.report.parameters["delta"] = lemma_delta ? nlohmann::json(*lemma_delta) : nlohmann::json(nullptr);
            const auto reports = run_lemma_suite(opt);
            nlohmann::json arr = nlohmann::json::array();
            bool ok = true;
            for (const auto& r : reports) {
                arr.push_back(to_json(r));
                ok = ok && r.passed;
                text << (r.passed ? "PASS " : "FAIL ") << r.check << " [" << r.cases << " cases]";
                if (r.counterexample)
                    text << " counterexample: " << *r.counterexample;
                text << '\n';
            }
            o.report.result = {{"checks", arr}, {"passed", ok}};
            o.code = ok ? exit_ok : exit_verification_failed;
        }
    } catch (const ParseError& e) {
        o.code = exit_usage;
        o.report.result = {{"error", {{"type", "usage"}, {"message", e.what()}}}};
        text.str("error: " + std::string(e.what()) + "\n");
    } catch (const SearchIncomplete& e) {
        o.code = exit_resource;
        o.report.result = {{"error",
                            {{"type", "resource"},
                             {"message", e.what()},
                             {"lower_bound", e.lower_bound},
                             {"upper_bound", e.upper_bound},
                             {"nodes_explored", e.nodes_explored}}}};
        text.str("error: " + std::string(e.what()) + "\n");
    } catch (const InstanceTooLarge& e) {
        o.code = exit_resource;
        o.report.result = {{"error", {{"type", "resource"}, {"message", e.what()}}}};
        text.str("error: " + std::string(e.what()) + "\n");
    } catch (const Error& e) {
        o.code = exit_domain;
        o.report.result = {{"error", {{"type", "domain"}, {"message", e.what()}}}};
        text.str("error: " + std::string(e.what()) + "\n");
    }

    if (o.code != exit_ok && o.code != exit_verification_failed && !json) {
        err << text.str();
        return o.code;
    }
    emit(o, json, text.str(), out);
    return o.code;
}

} // namespace knodeldom::cli
