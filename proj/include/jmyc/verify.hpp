#ifndef JMYC_VERIFY_HPP
#define JMYC_VERIFY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jmyc/graph.hpp"
#include "jmyc/paucity.hpp"

namespace jmyc {

// One replayable statement about a graph family. The harness computes both
// sides of each statement and records agreement; it never asserts, so a
// wrong statement shows up as a fail row, not a crash.
enum class TheoremId {
    myc_not_j,
    crib_plus_one,
    shadow_equal,
    federico_triangle_free,
    federico_j_plus_one,
    federico_chi_equal,
    federico_circular_equal,
    paucity_path,
    paucity_cycle,
};

enum class InstanceFamily { path, cycle, complete_bipartite, custom };

enum class ReportStatus { pass, fail, skipped };
enum class ReportFormat { json, markdown };

struct VerifyOptions {
    int max_vertices = default_max_vertices;
    int jobs = 1;
    // First part of K_{m,*} instances; the range sweeps the second part.
    int bipartite_m = 1;
    std::optional<Graph> custom_graph;
    // paucity instances up to these sizes additionally run the exhaustive
    // minimum search next to the constructive augmentation.
    int exact_path_limit = 4;
    int exact_cycle_limit = 4;
    long long subset_cap = default_subset_cap;
};

struct TheoremReport {
    TheoremId theorem;
    InstanceFamily family;
    int param = 0;
    std::string instance;
    std::string claimed;
    std::string computed; // empty when skipped
    ReportStatus status = ReportStatus::skipped;
    std::string reason;   // skip reason
    double runtime_ms = 0.0;
};

// Replays one theorem over the given parameter range. Instances whose
// hypotheses fail (non-J-colourable base, triangles where the statement
// needs triangle-free) or that trip a size guard are reported as skipped.
std::vector<TheoremReport> verify(TheoremId theorem, InstanceFamily family,
                                  std::span<const int> range, const VerifyOptions& opts = {});

// The desk-scale default suite for one theorem, and for all of them.
std::vector<TheoremReport> default_suite(TheoremId theorem, const VerifyOptions& opts = {});
std::vector<TheoremReport> verify_all(const VerifyOptions& opts = {});

// Deterministic rendering, sorted by (theorem, family, parameter).
// Timings are included only on request so identical inputs yield
// byte-identical documents.
std::string emit_report(std::span<const TheoremReport> reports, ReportFormat format,
                        bool include_timings = false);

const char* theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(const std::string& text);
std::vector<TheoremId> all_theorems();
const char* instance_family_name(InstanceFamily family);
std::optional<InstanceFamily> parse_instance_family(const std::string& text);

} // namespace jmyc

#endif
