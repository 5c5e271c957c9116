#include "jmyc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include <json.hpp>

#include "jmyc/circular.hpp"
#include "jmyc/coloring.hpp"
#include "jmyc/constructions.hpp"

namespace jmyc {

namespace {

std::string spectrum_str(const std::vector<int>& spectrum) {
    std::string out = "{";
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(spectrum[i]);
    }
    return out + "}";
}

std::string j_number_str(const JResult& result) {
    return result.j_number ? std::to_string(*result.j_number) : "none";
}

struct InstanceContext {
    InstanceFamily family;
    int param;
    Graph base;
    std::string instance;
};

InstanceContext make_instance(InstanceFamily family, int param, const VerifyOptions& opts) {
    switch (family) {
    case InstanceFamily::path:
        return {family, param, path_graph(param), "path n=" + std::to_string(param)};
    case InstanceFamily::cycle:
        return {family, param, cycle_graph(param), "cycle n=" + std::to_string(param)};
    case InstanceFamily::complete_bipartite:
        return {family, param, complete_bipartite_graph(opts.bipartite_m, param),
                "K_{" + std::to_string(opts.bipartite_m) + "," + std::to_string(param) + "}"};
    case InstanceFamily::custom:
        if (!opts.custom_graph)
            throw invalid_parameter_error("custom family needs a graph");
        return {family, param, *opts.custom_graph,
                "custom (" + std::to_string(opts.custom_graph->vertex_count()) + " vertices)"};
    }
    throw invalid_parameter_error("unknown family");
}

TheoremReport base_report(TheoremId id, const InstanceContext& ctx) {
    TheoremReport report;
    report.theorem = id;
    report.family = ctx.family;
    report.param = ctx.param;
    report.instance = ctx.instance;
    return report;
}

void settle(TheoremReport& report) {
    report.status = report.claimed == report.computed ? ReportStatus::pass : ReportStatus::fail;
}

void skip(TheoremReport& report, std::string reason) {
    report.status = ReportStatus::skipped;
    report.reason = std::move(reason);
    report.computed.clear();
}

bool guard_derived(TheoremReport& report, const Graph& derived, const VerifyOptions& opts) {
    if (derived.vertex_count() > opts.max_vertices) {
        skip(report, "size guard (" + std::to_string(derived.vertex_count()) + " > " +
                         std::to_string(opts.max_vertices) + " vertices)");
        return false;
    }
    return true;
}

std::vector<TheoremReport> run_instance(TheoremId id, const InstanceContext& ctx,
                                        const VerifyOptions& opts) {
    std::vector<TheoremReport> reports;
    TheoremReport report = base_report(id, ctx);
    const Graph& base = ctx.base;

    switch (id) {
    case TheoremId::myc_not_j: {
        report.claimed = "{}";
        Graph derived = mycielskian(base);
        if (!guard_derived(report, derived, opts))
            break;
        JResult full = j_solve(derived, opts.max_vertices);
        JResult internal = j_star_solve(derived, opts.max_vertices);
        report.computed = spectrum_str(full.spectrum);
        if (full.spectrum != internal.spectrum)
            report.computed += " (internal-only spectrum " + spectrum_str(internal.spectrum) + ")";
        settle(report);
        break;
    }
    case TheoremId::crib_plus_one:
    case TheoremId::shadow_equal: {
        if (!guard_derived(report, base, opts))
            break;
        JResult base_result = j_solve(base, opts.max_vertices);
        if (!base_result.j_number) {
            skip(report, "base graph is not J-colourable");
            break;
        }
        const bool plus_one = id == TheoremId::crib_plus_one;
        report.claimed = std::to_string(*base_result.j_number + (plus_one ? 1 : 0));
        Graph derived = plus_one ? crib(base) : shadow(base);
        if (!guard_derived(report, derived, opts))
            break;
        report.computed = j_number_str(j_solve(derived, opts.max_vertices));
        settle(report);
        break;
    }
    case TheoremId::federico_triangle_free: {
        if (!is_triangle_free(base)) {
            skip(report, "base graph has a triangle");
            break;
        }
        report.claimed = "true";
        report.computed = is_triangle_free(federico(base)) ? "true" : "false";
        settle(report);
        break;
    }
    case TheoremId::federico_j_plus_one: {
        if (!is_triangle_free(base)) {
            skip(report, "base graph has a triangle");
            break;
        }
        if (!guard_derived(report, base, opts))
            break;
        JResult base_result = j_solve(base, opts.max_vertices);
        if (!base_result.j_number) {
            skip(report, "base graph is not J-colourable");
            break;
        }
        report.claimed = std::to_string(*base_result.j_number + 1);
        Graph derived = federico(base);
        if (!guard_derived(report, derived, opts))
            break;
        report.computed = j_number_str(j_solve(derived, opts.max_vertices));
        settle(report);
        break;
    }
    case TheoremId::federico_chi_equal:
    case TheoremId::federico_circular_equal: {
        if (!is_triangle_free(base)) {
            skip(report, "base graph has a triangle");
            break;
        }
        Graph derived = federico(base);
        if (!guard_derived(report, base, opts) || !guard_derived(report, derived, opts))
            break;
        if (id == TheoremId::federico_chi_equal) {
            report.claimed = std::to_string(chromatic_number(base, opts.max_vertices));
            report.computed = std::to_string(chromatic_number(derived, opts.max_vertices));
        } else {
            report.claimed = circular_chromatic_number(base, opts.max_vertices).str();
            report.computed = circular_chromatic_number(derived, opts.max_vertices).str();
        }
        settle(report);
        break;
    }
    case TheoremId::paucity_path:
    case TheoremId::paucity_cycle: {
        const bool is_path = id == TheoremId::paucity_path;
        if (is_path && ctx.family != InstanceFamily::path)
            throw invalid_parameter_error("paucity_path runs on the path family");
        if (!is_path && ctx.family != InstanceFamily::cycle)
            throw invalid_parameter_error("paucity_cycle runs on the cycle family");
        const int n = ctx.param;
        if (is_path && n < 2) {
            skip(report, "augmentation needs n >= 2");
            break;
        }
        if (!is_path && n < 4) {
            skip(report, "augmentation needs n >= 4");
            break;
        }
        const int claimed_count = is_path ? n : n + 2 * (n % 3);
        report.claimed = std::to_string(claimed_count);
        Graph derived = mycielskian(base);
        if (!guard_derived(report, derived, opts))
            break;
        PaucityCertificate cert =
            is_path ? paucity_constructive_path(n) : paucity_constructive_cycle(n);
        report.computed = std::to_string(cert.count);
        settle(report);
        reports.push_back(report);

        const int exact_limit = is_path ? opts.exact_path_limit : opts.exact_cycle_limit;
        if (n > exact_limit)
            return reports;
        TheoremReport exact_report = base_report(id, ctx);
        exact_report.instance += " (exact)";
        exact_report.claimed = std::to_string(claimed_count);
        const auto started = std::chrono::steady_clock::now();
        try {
            auto exact = paucity_exact(derived, std::nullopt, opts.subset_cap, opts.max_vertices);
            exact_report.computed = exact ? std::to_string(exact->count) : "none";
            settle(exact_report);
        } catch (const size_limit_error& e) {
            skip(exact_report, e.what());
        }
        exact_report.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                .count();
        reports.push_back(exact_report);
        return reports;
    }
    }
    reports.push_back(report);
    return reports;
}

std::vector<TheoremReport> timed_instance(TheoremId id, const InstanceContext& ctx,
                                          const VerifyOptions& opts) {
    const auto started = std::chrono::steady_clock::now();
    std::vector<TheoremReport> reports;
    try {
        reports = run_instance(id, ctx, opts);
    } catch (const invalid_parameter_error&) {
        throw; // caller misuse, not an experimental outcome
    } catch (const size_limit_error& e) {
        TheoremReport report = base_report(id, ctx);
        skip(report, e.what());
        reports.push_back(report);
    } catch (const error& e) {
        TheoremReport report = base_report(id, ctx);
        report.computed = std::string("error: ") + e.what();
        report.status = ReportStatus::fail;
        reports.push_back(report);
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    for (auto& report : reports)
        if (report.runtime_ms == 0.0)
            report.runtime_ms = elapsed;
    return reports;
}

} // namespace

std::vector<TheoremReport> verify(TheoremId theorem, InstanceFamily family,
                                  std::span<const int> range, const VerifyOptions& opts) {
    std::vector<InstanceContext> instances;
    instances.reserve(range.size());
    for (int param : range)
        instances.push_back(make_instance(family, param, opts));
    std::vector<TheoremReport> reports;
    if (opts.jobs > 1) {
        std::vector<std::future<std::vector<TheoremReport>>> futures;
        futures.reserve(instances.size());
        for (const auto& ctx : instances)
            futures.push_back(std::async(std::launch::async, [&, ctx] {
                return timed_instance(theorem, ctx, opts);
            }));
        for (auto& future : futures)
            for (auto& report : future.get())
                reports.push_back(std::move(report));
    } else {
        for (const auto& ctx : instances)
            for (auto& report : timed_instance(theorem, ctx, opts))
                reports.push_back(std::move(report));
    }
    return reports;
}

std::vector<TheoremReport> default_suite(TheoremId theorem, const VerifyOptions& opts) {
    const std::vector<int> paths_small{2, 3, 4, 5, 6};
    const std::vector<int> paths_wide{2, 3, 4, 5, 6, 7};
    const std::vector<int> paths_federico{2, 3, 4, 5};
    const std::vector<int> cycles_small{4, 5, 6};
    const std::vector<int> cycles_wide{4, 5, 6, 7, 8, 9};

    std::vector<TheoremReport> reports;
    auto append = [&](InstanceFamily family, std::span<const int> range,
                      std::optional<int> bipartite_m = std::nullopt) {
        VerifyOptions local = opts;
        if (bipartite_m)
            local.bipartite_m = *bipartite_m;
        for (auto& report : verify(theorem, family, range, local))
            reports.push_back(std::move(report));
    };
    const std::vector<int> star{3};
    switch (theorem) {
    case TheoremId::myc_not_j:
        append(InstanceFamily::path, paths_small);
        append(InstanceFamily::cycle, cycles_small);
        append(InstanceFamily::complete_bipartite, star, 1); // K_{1,3}
        break;
    case TheoremId::crib_plus_one:
    case TheoremId::shadow_equal:
        append(InstanceFamily::path, paths_wide);
        append(InstanceFamily::cycle, cycles_small);
        append(InstanceFamily::complete_bipartite, star, 2); // K_{2,3}
        break;
    case TheoremId::federico_triangle_free:
    case TheoremId::federico_j_plus_one:
    case TheoremId::federico_chi_equal:
    case TheoremId::federico_circular_equal:
        append(InstanceFamily::path, paths_federico);
        append(InstanceFamily::cycle, cycles_small);
        break;
    case TheoremId::paucity_path:
        append(InstanceFamily::path, paths_wide);
        break;
    case TheoremId::paucity_cycle:
        append(InstanceFamily::cycle, cycles_wide);
        break;
    }
    return reports;
}

std::vector<TheoremReport> verify_all(const VerifyOptions& opts) {
    std::vector<TheoremReport> reports;
    for (TheoremId id : all_theorems())
        for (auto& report : default_suite(id, opts))
            reports.push_back(std::move(report));
    return reports;
}

std::string emit_report(std::span<const TheoremReport> reports, ReportFormat format,
                        bool include_timings) {
    std::vector<TheoremReport> sorted(reports.begin(), reports.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return std::tuple(static_cast<int>(a.theorem), static_cast<int>(a.family), a.param,
                          a.instance) < std::tuple(static_cast<int>(b.theorem),
                                                   static_cast<int>(b.family), b.param,
                                                   b.instance);
    });
    if (format == ReportFormat::json) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& report : sorted) {
            nlohmann::ordered_json row;
            row["theorem"] = theorem_name(report.theorem);
            row["instance"] = report.instance;
            row["claimed"] = report.claimed;
            if (report.status == ReportStatus::skipped)
                row["reason"] = report.reason;
            else
                row["computed"] = report.computed;
            switch (report.status) {
            case ReportStatus::pass: row["status"] = "pass"; break;
            case ReportStatus::fail: row["status"] = "fail"; break;
            case ReportStatus::skipped: row["status"] = "skipped"; break;
            }
            if (include_timings)
                row["runtime_ms"] = report.runtime_ms;
            doc.push_back(std::move(row));
        }
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "| theorem | instance | claimed | computed | status |";
    if (include_timings)
        out << " runtime_ms |";
    out << "\n|---|---|---|---|---|";
    if (include_timings)
        out << "---|";
    out << "\n";
    for (const auto& report : sorted) {
        out << "| " << theorem_name(report.theorem) << " | " << report.instance << " | "
            << report.claimed << " | ";
        out << (report.status == ReportStatus::skipped ? std::string("—") : report.computed);
        out << " | ";
        switch (report.status) {
        case ReportStatus::pass: out << "pass"; break;
        case ReportStatus::fail: out << "fail"; break;
        case ReportStatus::skipped: out << "skipped: " << report.reason; break;
        }
        out << " |";
        if (include_timings)
            out << " " << static_cast<long long>(report.runtime_ms + 0.5) << " |";
        out << "\n";
    }
    return out.str();
}

const char* theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::myc_not_j: return "myc_not_j";
    case TheoremId::crib_plus_one: return "crib_plus_one";
    case TheoremId::shadow_equal: return "shadow_equal";
    case TheoremId::federico_triangle_free: return "federico_triangle_free";
    case TheoremId::federico_j_plus_one: return "federico_j_plus_one";
    case TheoremId::federico_chi_equal: return "federico_chi_equal";
    case TheoremId::federico_circular_equal: return "federico_circular_equal";
    case TheoremId::paucity_path: return "paucity_path";
    case TheoremId::paucity_cycle: return "paucity_cycle";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem(const std::string& text) {
    for (TheoremId id : all_theorems())
        if (text == theorem_name(id))
            return id;
    return std::nullopt;
}

std::vector<TheoremId> all_theorems() {
    return {TheoremId::myc_not_j,
            TheoremId::crib_plus_one,
            TheoremId::shadow_equal,
            TheoremId::federico_triangle_free,
            TheoremId::federico_j_plus_one,
            TheoremId::federico_chi_equal,
            TheoremId::federico_circular_equal,
            TheoremId::paucity_path,
            TheoremId::paucity_cycle};
}

const char* instance_family_name(InstanceFamily family) {
    switch (family) {
    case InstanceFamily::path: return "path";
    case InstanceFamily::cycle: return "cycle";
    case InstanceFamily::complete_bipartite: return "complete_bipartite";
    case InstanceFamily::custom: return "custom";
    }
    return "?";
}

std::optional<InstanceFamily> parse_instance_family(const std::string& text) {
    if (text == "path") return InstanceFamily::path;
    if (text == "cycle") return InstanceFamily::cycle;
    if (text == "complete_bipartite") return InstanceFamily::complete_bipartite;
    if (text == "custom") return InstanceFamily::custom;
    return std::nullopt;
}

} // namespace jmyc
