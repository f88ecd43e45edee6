#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "daisy/expansion.hpp"
#include "daisy/medians.hpp"

namespace daisy::verify {

enum class Verdict { pass, fail, skip };

std::string_view verdict_name(Verdict v);

// One named check over one instance (or one summarized family). A fail
// always carries a witness reproducible from the report alone.
struct CheckReport {
    std::string check;
    std::string instance;
    Verdict verdict = Verdict::skip;
    std::string detail;
    double millis = 0.0;
};

struct HarnessOptions {
    // all Hamming hosts with at most this many vertices, up to factor order
    long long characterization_host_vertices = 27;
    // shapes for the pair-generated isometry check
    std::vector<Shape> pair_shapes{Shape{{3, 3}}, Shape{{4, 2}}, Shape{{2, 2, 2}}};
    // shapes whose isometric minimal-host daisy graphs feed the structure suite
    std::vector<Shape> structure_shapes{Shape{{2, 2}}, Shape{{3, 2}}, Shape{{3, 3}},
                                        Shape{{2, 2, 2}}};
    std::vector<Shape> singleton_shapes{Shape{{3, 3}}, Shape{{3, 2, 4}},
                                        Shape{{2, 2, 2}}};
    int triangle_max_dim = 3;
    int triangle_max_factor = 4;
    // expansion/contraction family: minimal hosts with at most this many vertices
    long long expansion_host_vertices = 12;
    int expansion_samples = 100;          // valid sampled cover families per base
    long long exhaustive_cover_vertices = 6;  // exhaustive family enumeration below this
    int tree_vertices = 6;                // all labeled trees up to this size
    unsigned long long seed = 271828;
    bool quick = false;

    static HarnessOptions full();
    static HarnessOptions quick_suite();
};

// Individual checks; each returns reports sorted by (check, instance).
std::vector<CheckReport> check_sufficient_size0(const HarnessOptions& opt);
std::vector<CheckReport> check_sufficient_size1(const HarnessOptions& opt);
std::vector<CheckReport> check_characterization(const HarnessOptions& opt);
std::vector<CheckReport> check_pair_theorem(const HarnessOptions& opt);
std::vector<CheckReport> check_structure_lemmas(const HarnessOptions& opt);
std::vector<CheckReport> check_expansion_theorems(const HarnessOptions& opt);
std::vector<CheckReport> check_hamming_triangle_condition(const HarnessOptions& opt);
std::vector<CheckReport> check_c6_counterexample(const HarnessOptions& opt);
std::vector<CheckReport> check_singleton_daisy_cube(const HarnessOptions& opt);

// Runs everything; result ordered by check name, then instance.
std::vector<CheckReport> run_suite(const HarnessOptions& opt);

bool all_passed(const std::vector<CheckReport>& reports);

// Rendered report. Timing is excluded by default so that reports are
// byte-identical across runs.
std::string render_text(const std::vector<CheckReport>& reports,
                        const HarnessOptions& opt, bool include_timing = false);
std::string render_json(const std::vector<CheckReport>& reports,
                        const HarnessOptions& opt, bool include_timing = false);

// --- coverage manifest ----------------------------------------------------

// Maps every verified structural statement to the check that exercises it.
struct StatementCoverage {
    std::string_view statement;
    std::string_view check;
};
std::span<const StatementCoverage> coverage_manifest();
std::span<const std::string_view> registered_checks();

// --- instance families ------------------------------------------------------

// All Hamming shapes with at most max_vertices vertices, one per factor
// multiset (nondecreasing factors), including the empty shape.
std::vector<Shape> shapes_up_to(long long max_vertices);
// All ordered factor tuples (factors >= 2) with product <= max_vertices.
std::vector<Shape> ordered_shapes_up_to(long long max_vertices);
// Ordered shapes with dim <= max_dim and every factor <= max_factor.
std::vector<Shape> shapes_with_bounds(int max_dim, int max_factor);
// All labeled trees on n vertices, decoded from Prüfer sequences.
std::vector<GenericGraph> labeled_trees(int n);

// The six-cycle rooted fixture: vertices labeled u, x1, x2, r, y2, y1 in
// cycle order, so that x1 and y1 are the neighbors of u and r is antipodal
// to u. Root is the vertex labeled "r".
GenericGraph c6_rooted();
int c6_root();

// Exhaustive scan over every daisy graph of the host: are all of them
// isometric? Stops at the first non-isometric daisy graph. Host must have
// at most 64 vertices.
struct DaisyScan {
    bool all_isometric = true;
    long long daisy_count = 0;
    std::string witness;  // describes the first non-isometric daisy graph
};
DaisyScan scan_all_daisy_isometric(const Shape& shape);
DaisyScan scan_all_daisy_isometric(const GenericGraph& host, int root);

// Does every vertex pair admit a pseudo-median of size <= 1 with the root?
struct SmallMedianScan {
    bool all_small = true;
    std::string witness;  // first failing pair
};
SmallMedianScan scan_small_pseudo_medians(const Shape& shape);
SmallMedianScan scan_small_pseudo_medians(const GenericGraph& host, int root);

// The three-phase geodesic between u and v inside the daisy graph generated
// by {x, y}: first the coordinates where v is zero are cleared, then the
// single mixed coordinate (when present) is switched, then the coordinates
// where u is zero are filled from v. Both endpoints are included.
std::vector<Vertex> pair_geodesic(const Shape& shape, const Vertex& x,
                                  const Vertex& y, const Vertex& u, const Vertex& v);

// All isometric daisy graphs whose minimal host is exactly the given shape.
std::vector<DaisyGraph> isometric_minimal_daisy_graphs(const Shape& shape);

}  // namespace daisy::verify
