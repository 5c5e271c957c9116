// jmyc — build Mycielski-type graphs and decide their rainbow-colouring
// parameters exactly. Subcommands compose over stdin/stdout pipes:
//
//   jmyc gen --family path --n 7 | jmyc build --construction mycielskian | jmyc solve j
//
// Exit codes: 0 success, 1 domain error (bad graph, size guard, I/O),
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jmyc/circular.hpp"
#include "jmyc/coloring.hpp"
#include "jmyc/constructions.hpp"
#include "jmyc/graph.hpp"
#include "jmyc/graph_io.hpp"
#include "jmyc/paucity.hpp"
#include "jmyc/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

int resolve_guard(int flag_value) {
    if (flag_value > 0)
        return flag_value;
    if (const char* env = std::getenv("JMYC_MAX_VERTICES")) {
        try {
            const int parsed = std::stoi(env);
            if (parsed > 0)
                return parsed;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring unusable JMYC_MAX_VERTICES='" << env << "'\n";
    }
    return jmyc::default_max_vertices;
}

jmyc::Graph read_graph(const std::string& input_path) {
    std::string text;
    if (input_path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(input_path);
        if (!in)
            throw jmyc::error("cannot read '" + input_path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    return jmyc::parse_graph(text);
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw jmyc::error("cannot write '" + out_path + "'");
    out << text;
}

ordered_json coloring_json(const jmyc::Coloring& c) {
    return ordered_json(c.assignment);
}

std::vector<int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos)
            return {std::stoi(text)};
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (hi < lo)
            throw jmyc::invalid_parameter_error("empty range '" + text + "'");
        std::vector<int> values;
        for (int v = lo; v <= hi; ++v)
            values.push_back(v);
        return values;
    } catch (const std::invalid_argument&) {
        throw jmyc::invalid_parameter_error("range must look like '2..7' or '5', got '" + text +
                                            "'");
    } catch (const std::out_of_range&) {
        throw jmyc::invalid_parameter_error("range value out of range in '" + text + "'");
    }
}

struct GenArgs {
    std::string family;
    int n = 0;
    int m = 0;
    std::string out;
};

struct BuildArgs {
    std::string construction;
    std::string input;
    std::string out;
    bool dot = false;
};

struct SolveArgs {
    std::string input;
    std::string out;
    int max_vertices = 0;
    int t = -1;    // j / j-star: probe a single colour count
    int max_k = 0; // circular
};

struct PaucityArgs {
    std::string input;
    std::string out;
    std::string family;
    int n = 0;
    bool exact = false;
    int budget_limit = -1;
    long long cap = jmyc::default_subset_cap;
    int max_vertices = 0;
};

struct VerifyArgs {
    std::string theorem;
    std::string family;
    std::string range;
    std::string input;
    std::string out;
    std::string format;
    int bipartite_m = 1;
    int jobs = 1;
    bool timings = false;
    int max_vertices = 0;
};

struct ExportArgs {
    std::string input;
    std::string out;
    bool dot = false;
};

int run_gen(const GenArgs& args) {
    auto family = jmyc::parse_family(args.family);
    if (!family)
        throw jmyc::invalid_parameter_error("unknown family '" + args.family + "'");
    std::vector<int> params;
    if (*family == jmyc::GraphFamily::complete_bipartite) {
        if (args.m < 1)
            throw jmyc::invalid_parameter_error("complete_bipartite needs --m");
        params = {args.m, args.n};
    } else {
        params = {args.n};
    }
    const jmyc::Graph g = jmyc::generate(*family, params);
    write_output(args.out, jmyc::serialize_graph(g) + "\n");
    return exit_ok;
}

int run_build(const BuildArgs& args) {
    auto kind = jmyc::parse_construction(args.construction);
    if (!kind)
        throw jmyc::invalid_parameter_error("unknown construction '" + args.construction + "'");
    const jmyc::Graph base = read_graph(args.input);
    if (*kind == jmyc::ConstructionKind::federico && !jmyc::is_triangle_free(base))
        std::cerr << "warning: base graph has a triangle; the construction is defined but the "
                     "triangle-free statements do not apply\n";
    const jmyc::Graph derived = jmyc::apply_construction(*kind, base);
    write_output(args.out,
                 args.dot ? jmyc::to_dot(derived) : jmyc::serialize_graph(derived) + "\n");
    return exit_ok;
}

int run_solve_chromatic(const SolveArgs& args) {
    const jmyc::Graph g = read_graph(args.input);
    ordered_json doc;
    doc["chromatic_number"] = jmyc::chromatic_number(g, resolve_guard(args.max_vertices));
    write_output(args.out, doc.dump() + "\n");
    return exit_ok;
}

int run_solve_rainbow(const SolveArgs& args, bool internal_only) {
    const jmyc::Graph g = read_graph(args.input);
    const int guard = resolve_guard(args.max_vertices);
    jmyc::JResult result;
    if (args.t >= 0) {
        auto witness = internal_only ? jmyc::find_j_star_coloring(g, args.t, guard)
                                     : jmyc::find_j_coloring(g, args.t, guard);
        if (witness) {
            result.spectrum = {args.t};
            result.j_number = args.t;
            result.witness = std::move(witness);
        }
    } else {
        result = internal_only ? jmyc::j_star_solve(g, guard) : jmyc::j_solve(g, guard);
    }
    ordered_json doc;
    doc["spectrum"] = result.spectrum;
    doc["j_number"] = result.j_number ? ordered_json(*result.j_number) : ordered_json(nullptr);
    if (result.witness)
        doc["witness"] = coloring_json(*result.witness);
    write_output(args.out, doc.dump() + "\n");
    return exit_ok;
}

int run_solve_circular(const SolveArgs& args) {
    const jmyc::Graph g = read_graph(args.input);
    const auto result = jmyc::circular_solve(g, resolve_guard(args.max_vertices), args.max_k);
    ordered_json doc;
    doc["num"] = result.value.num;
    doc["den"] = result.value.den;
    if (result.witness) {
        ordered_json witness;
        witness["k"] = result.witness->k;
        witness["d"] = result.witness->d;
        witness["assignment"] = result.witness->assignment;
        doc["witness"] = std::move(witness);
    }
    write_output(args.out, doc.dump() + "\n");
    return exit_ok;
}

ordered_json certificate_json(const jmyc::PaucityCertificate& cert) {
    ordered_json doc;
    doc["count"] = cert.count;
    doc["added_edges"] = ordered_json::array();
    for (const auto& [a, b] : cert.added_edges)
        doc["added_edges"].push_back({a, b});
    doc["witness"] = coloring_json(cert.witness);
    return doc;
}

int run_paucity(const PaucityArgs& args) {
    if (!args.family.empty()) {
        // Constructive augmentation of the Mycielskian of P_n / C_n.
        if (args.n < 1)
            throw jmyc::invalid_parameter_error("--family needs --n");
        jmyc::PaucityCertificate cert;
        if (args.family == "path")
            cert = jmyc::paucity_constructive_path(args.n);
        else if (args.family == "cycle")
            cert = jmyc::paucity_constructive_cycle(args.n);
        else
            throw jmyc::invalid_parameter_error("--family must be path or cycle, got '" +
                                                args.family + "'");
        write_output(args.out, certificate_json(cert).dump() + "\n");
        return exit_ok;
    }
    const jmyc::Graph g = read_graph(args.input);
    std::optional<int> budget;
    if (args.budget_limit >= 0)
        budget = args.budget_limit;
    auto cert = jmyc::paucity_exact(g, budget, args.cap, resolve_guard(args.max_vertices));
    if (!cert) {
        std::cerr << "no augmentation within the budget\n";
        ordered_json doc;
        doc["count"] = nullptr;
        write_output(args.out, doc.dump() + "\n");
        return exit_ok;
    }
    write_output(args.out, certificate_json(*cert).dump() + "\n");
    return exit_ok;
}

int run_verify(const VerifyArgs& args) {
    jmyc::VerifyOptions opts;
    opts.max_vertices = resolve_guard(args.max_vertices);
    opts.jobs = std::max(1, args.jobs);
    opts.bipartite_m = args.bipartite_m;
    if (!args.input.empty())
        opts.custom_graph = read_graph(args.input);

    std::vector<jmyc::TheoremId> theorems;
    if (args.theorem == "all") {
        theorems = jmyc::all_theorems();
    } else {
        auto id = jmyc::parse_theorem(args.theorem);
        if (!id)
            throw jmyc::invalid_parameter_error("unknown theorem '" + args.theorem + "'");
        theorems = {*id};
    }

    std::vector<jmyc::TheoremReport> reports;
    if (!args.family.empty()) {
        auto family = jmyc::parse_instance_family(args.family);
        if (!family)
            throw jmyc::invalid_parameter_error("unknown family '" + args.family + "'");
        std::vector<int> range;
        if (*family == jmyc::InstanceFamily::custom)
            range = {0};
        else if (!args.range.empty())
            range = parse_range(args.range);
        else
            throw jmyc::invalid_parameter_error("--family needs --range");
        // with --theorem all, drop statements that are tied to another family
        if (args.theorem == "all")
            std::erase_if(theorems, [&](jmyc::TheoremId id) {
                if (id == jmyc::TheoremId::paucity_path)
                    return *family != jmyc::InstanceFamily::path;
                if (id == jmyc::TheoremId::paucity_cycle)
                    return *family != jmyc::InstanceFamily::cycle;
                return false;
            });
        for (auto id : theorems)
            for (auto& report : jmyc::verify(id, *family, range, opts))
                reports.push_back(std::move(report));
    } else {
        if (!args.range.empty())
            throw jmyc::invalid_parameter_error("--range needs --family");
        for (auto id : theorems)
            for (auto& report : jmyc::default_suite(id, opts))
                reports.push_back(std::move(report));
    }

    jmyc::ReportFormat format = jmyc::ReportFormat::markdown;
    if (args.format == "json")
        format = jmyc::ReportFormat::json;
    else if (args.format.empty() && args.out.size() >= 5 &&
             args.out.substr(args.out.size() - 5) == ".json")
        format = jmyc::ReportFormat::json;
    else if (!args.format.empty() && args.format != "markdown")
        throw jmyc::invalid_parameter_error("--format must be json or markdown");
    write_output(args.out, jmyc::emit_report(reports, format, args.timings));

    for (const auto& report : reports)
        if (report.status == jmyc::ReportStatus::fail)
            std::cerr << "mismatch: " << jmyc::theorem_name(report.theorem) << " "
                      << report.instance << " claimed " << report.claimed << ", computed "
                      << report.computed << "\n";
    return exit_ok;
}

int run_export(const ExportArgs& args) {
    const jmyc::Graph g = read_graph(args.input);
    write_output(args.out, args.dot ? jmyc::to_dot(g) : jmyc::serialize_graph(g) + "\n");
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mycielski-type graph constructions and exact rainbow-colouring solvers"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a standard family graph as JSON");
    gen->add_option("--family", gen_args.family,
                    "path | cycle | complete | complete_bipartite")
        ->required();
    gen->add_option("--n", gen_args.n, "vertex count (second part for bipartite)")->required();
    gen->add_option("--m", gen_args.m, "first part of complete_bipartite");
    gen->add_option("--out", gen_args.out, "write to file instead of stdout");

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "apply a construction to a base graph");
    build->add_option("--construction", build_args.construction,
                      "mycielskian | crib | shadow | federico")
        ->required();
    build->add_option("-i,--input", build_args.input, "graph JSON file (default: stdin)");
    build->add_flag("--dot", build_args.dot, "emit DOT instead of JSON");
    build->add_option("--out", build_args.out, "write to file instead of stdout");

    auto* solve = app.add_subcommand("solve", "exact colouring solvers");
    solve->require_subcommand(1);
    SolveArgs chromatic_args, j_args, j_star_args, circular_args;
    auto add_common = [](CLI::App* cmd, SolveArgs& args) {
        cmd->add_option("-i,--input", args.input, "graph JSON file (default: stdin)");
        cmd->add_option("--out", args.out, "write to file instead of stdout");
        cmd->add_option("--max-vertices", args.max_vertices,
                        "solver size guard (default 64; env JMYC_MAX_VERTICES)");
    };
    auto* chromatic = solve->add_subcommand("chromatic", "least proper colour count");
    add_common(chromatic, chromatic_args);
    auto* solve_j = solve->add_subcommand("j", "full-rainbow colouring spectrum");
    add_common(solve_j, j_args);
    solve_j->add_option("--t", j_args.t, "probe a single colour count");
    auto* solve_j_star = solve->add_subcommand("j-star", "rainbow spectrum, internal vertices only");
    add_common(solve_j_star, j_star_args);
    solve_j_star->add_option("--t", j_star_args.t, "probe a single colour count");
    auto* circular = solve->add_subcommand("circular", "circular chromatic number (exact rational)");
    add_common(circular, circular_args);
    circular->add_option("--max-k", circular_args.max_k, "cap the modulus sweep");

    PaucityArgs paucity_args;
    auto* paucity = app.add_subcommand("paucity", "fewest edges to add for a full-rainbow colouring");
    paucity->add_option("-i,--input", paucity_args.input, "graph JSON file (default: stdin)");
    paucity->add_flag("--exact", paucity_args.exact,
                      "exhaustive minimum search (the default behaviour)");
    paucity->add_option("--budget-limit", paucity_args.budget_limit,
                        "stop after this augmentation size");
    paucity->add_option("--cap", paucity_args.cap, "subset-count guard per level");
    paucity->add_option("--family", paucity_args.family,
                        "path | cycle: constructive augmentation of its Mycielskian");
    paucity->add_option("--n", paucity_args.n, "family parameter for --family");
    paucity->add_option("--out", paucity_args.out, "write to file instead of stdout");
    paucity->add_option("--max-vertices", paucity_args.max_vertices, "solver size guard");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "replay theorem statements over families");
    verify->add_option("--theorem", verify_args.theorem, "theorem id or 'all'")->required();
    verify->add_option("--family", verify_args.family,
                       "path | cycle | complete_bipartite | custom");
    verify->add_option("--range", verify_args.range, "parameter range, e.g. 2..7");
    verify->add_option("--m", verify_args.bipartite_m, "first part of K_{m,*} (default 1)");
    verify->add_option("-i,--input", verify_args.input, "graph for the custom family");
    verify->add_option("--out", verify_args.out, "report file (.json selects JSON)");
    verify->add_option("--format", verify_args.format, "json | markdown");
    verify->add_option("--jobs", verify_args.jobs, "run instances concurrently");
    verify->add_flag("--timings", verify_args.timings, "include per-instance runtimes");
    verify->add_option("--max-vertices", verify_args.max_vertices, "solver size guard");

    ExportArgs export_args;
    auto* exporter = app.add_subcommand("export", "re-emit a graph (canonical JSON or DOT)");
    exporter->add_option("-i,--input", export_args.input, "graph JSON file (default: stdin)");
    exporter->add_flag("--dot", export_args.dot, "emit DOT");
    exporter->add_option("--out", export_args.out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (gen->parsed())
            return run_gen(gen_args);
        if (build->parsed())
            return run_build(build_args);
        if (chromatic->parsed())
            return run_solve_chromatic(chromatic_args);
        if (solve_j->parsed())
            return run_solve_rainbow(j_args, false);
        if (solve_j_star->parsed())
            return run_solve_rainbow(j_star_args, true);
        if (circular->parsed())
            return run_solve_circular(circular_args);
        if (paucity->parsed())
            return run_paucity(paucity_args);
        if (verify->parsed())
            return run_verify(verify_args);
        if (exporter->parsed())
            return run_export(export_args);
    } catch (const jmyc::invalid_parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const jmyc::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    }
    return exit_usage;
}
