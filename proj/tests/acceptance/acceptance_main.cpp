// Acceptance suite: exhaustive desk-scale verification of every contract the
// library makes, one criterion per line, with hard wall-time budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "daisy/document.hpp"
#include "daisy/verify.hpp"

using namespace daisy;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome from_reports(const std::vector<verify::CheckReport>& reports,
                     const std::string& summary) {
    for (const verify::CheckReport& r : reports) {
        if (r.verdict == verify::Verdict::fail) {
            return {false, r.check + " | " + r.instance + " | " + r.detail};
        }
    }
    return {true, summary};
}

// 1. product-rule intervals equal brute-force intervals on every shape with
//    at most 64 vertices
Outcome interval_oracle() {
    long long shapes = 0, pairs = 0, mismatches = 0;
    for (const Shape& shape : verify::ordered_shapes_up_to(64)) {
        ++shapes;
        std::vector<Vertex> verts = enumerate_vertices(shape);
        for (const Vertex& u : verts) {
            for (const Vertex& v : verts) {
                ++pairs;
                std::vector<Vertex> rule = hamming_interval(u, v);
                std::vector<Vertex> filter;
                int duv = hamming_distance(u, v);
                for (const Vertex& w : verts) {
                    if (hamming_distance(u, w) + hamming_distance(w, v) == duv) {
                        filter.push_back(w);
                    }
                }
                if (rule != filter ||
                    rule.size() != (std::size_t{1} << duv)) {
                    ++mismatches;
                    if (mismatches == 1) {
                        return {false, "mismatch at shape " + format_shape(shape) +
                                           " pair " + format_vertex(u) + " / " +
                                           format_vertex(v)};
                    }
                }
            }
        }
    }
    return {true, std::to_string(shapes) + " shapes, " + std::to_string(pairs) +
                      " pairs, 0 mismatches"};
}

// 2. the coordinate rule gives the unique minimal pseudo-median, sized by
//    the pairwise-distinct coordinate count
Outcome quasi_median_agreement() {
    long long triples = 0;
    for (const Shape& shape : {Shape{{3, 3}}, Shape{{2, 2, 2}}}) {
        LabeledGraph host = full_host(shape);
        GenericGraph g = host.to_generic();
        int n = g.vertex_count();
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                for (int w = 0; w < n; ++w) {
                    ++triples;
                    PseudoMedianResult pm = pseudo_medians(g, u, v, w);
                    MedianTriple qm = quasi_median_hamming(
                        shape, host.vertex(u), host.vertex(v), host.vertex(w));
                    bool ok = pm.size == qm.size && pm.triples.size() == 1 &&
                              host.vertex(pm.triples[0].x) == qm.x &&
                              host.vertex(pm.triples[0].y) == qm.y &&
                              host.vertex(pm.triples[0].z) == qm.z;
                    if (!ok) {
                        return {false,
                                "shape " + format_shape(shape) + " triple (" +
                                    format_vertex(host.vertex(u)) + ", " +
                                    format_vertex(host.vertex(v)) + ", " +
                                    format_vertex(host.vertex(w)) + "): " +
                                    std::to_string(pm.triples.size()) +
                                    " minimal triples of size " +
                                    std::to_string(pm.size) + ", coordinate rule says " +
                                    std::to_string(qm.size)};
                    }
                }
            }
        }
    }
    return {true, std::to_string(triples) +
                      " triples, coordinate rule unique and exact, 0 mismatches"};
}

// 3. the triangle condition holds on every Hamming shape with dim <= 3 and
//    factors <= 4
Outcome hamming_triangle() {
    long long shapes = 0, candidates = 0;
    for (const Shape& shape : verify::shapes_with_bounds(3, 4)) {
        ++shapes;
        TriangleConditionReport tc = triangle_condition(full_host(shape).to_generic());
        candidates += tc.candidates;
        if (!tc.holds) {
            return {false, "counterexample in shape " + format_shape(shape)};
        }
    }
    return {true, std::to_string(shapes) + " shapes, " + std::to_string(candidates) +
                      " candidate configurations, 0 counterexamples"};
}

// 4. the rooted six-cycle behaves exactly as documented
Outcome c6_counterexample() {
    verify::HarnessOptions opt = verify::HarnessOptions::full();
    return from_reports(verify::check_c6_counterexample(opt),
                        "whole-cycle daisy isometric; triple (x1,y1,r) has minimal "
                        "size 2; non-isometric daisy graph found and witnessed");
}

// 5. the characterization biconditional on every host with <= 27 vertices
Outcome characterization() {
    long long hosts = 0, daisy_total = 0;
    for (const Shape& shape : verify::shapes_up_to(27)) {
        ++hosts;
        GenericGraph g = full_host(shape).to_generic();
        if (!rooted_triangle_condition(g, 0).holds) {
            return {false, "rooted triangle condition fails on " + format_shape(shape)};
        }
        verify::DaisyScan left = verify::scan_all_daisy_isometric(shape);
        verify::SmallMedianScan right = verify::scan_small_pseudo_medians(shape);
        daisy_total += left.daisy_count;
        if (left.all_isometric != right.all_small) {
            return {false, "biconditional fails on " + format_shape(shape) +
                               ": left=" + (left.all_isometric ? "yes" : "no") +
                               " right=" + (right.all_small ? "yes" : "no") +
                               (left.witness.empty() ? "" : " (" + left.witness + ")") +
                               (right.witness.empty() ? ""
                                                      : " (" + right.witness + ")")};
        }
    }
    return {true, std::to_string(hosts) + " hosts, " + std::to_string(daisy_total) +
                      " daisy graphs scanned, 0 violations"};
}

// 6. the pair-generated isometry criterion and the three-phase geodesics
Outcome pair_theorem() {
    verify::HarnessOptions opt = verify::HarnessOptions::full();
    std::vector<verify::CheckReport> reports = verify::check_pair_theorem(opt);
    long long geodesics = 0;
    for (const verify::CheckReport& r : reports) {
        std::size_t pos = r.detail.find(" three-phase");
        if (pos != std::string::npos) {
            std::size_t start = r.detail.rfind(' ', pos - 1);
            geodesics += std::stoll(r.detail.substr(start + 1, pos - start - 1));
        }
    }
    return from_reports(reports,
                        "all generator pairs match the size criterion; " +
                            std::to_string(geodesics) +
                            " three-phase geodesics validated, 0 violations");
}

// 7. the structure lemmas over every isometric minimal-host daisy graph of
//    the four reference shapes
Outcome structure_suite() {
    verify::HarnessOptions opt = verify::HarnessOptions::full();
    return from_reports(verify::check_structure_lemmas(opt),
                        "half-spaces, anchoring, class count, peripherality and "
                        "projections verified, 0 violations");
}

// 8. decomposition to the one-vertex graph with exact replay, plus sampled
//    valid expansions staying isometric daisy
Outcome expansion_characterization() {
    verify::HarnessOptions opt = verify::HarnessOptions::full();
    return from_reports(verify::check_expansion_theorems(opt),
                        "every base decomposes in exactly dim steps with validated "
                        "intermediates and exact replay; >= 100 sampled families per "
                        "base all expand to isometric daisy graphs");
}

// 9. expand(contract(g, j)) is label-isomorphic to g, and the generic
//    clique-contraction oracle agrees with coordinate deletion
Outcome round_trip() {
    long long checked = 0;
    for (const Shape& shape : verify::shapes_up_to(12)) {
        for (const DaisyGraph& base : verify::isometric_minimal_daisy_graphs(shape)) {
            for (int j = 0; j < shape.dim(); ++j) {
                ContractionResult c = contract(base, j);
                DaisyGraph re = daisy_peripheral_expand_at(c.graph, c.covers, j);
                if (re.graph.vertices() != base.graph.vertices()) {
                    return {false, "labeled round trip differs on " +
                                       format_shape(shape) + " coord " +
                                       std::to_string(j)};
                }
                std::vector<std::vector<int>> id_sets;
                for (const auto& cover : c.covers) {
                    std::vector<int> ids;
                    for (const Vertex& v : cover) ids.push_back(c.graph.graph.index_of(v));
                    id_sets.push_back(std::move(ids));
                }
                ExpansionResult exp = expand(c.graph.graph.to_generic(), id_sets);
                std::vector<Vertex> produced;
                for (auto [xid, l] : exp.origin) {
                    Vertex v = c.graph.graph.vertex(xid);
                    v.insert(v.begin() + j, l);
                    produced.push_back(std::move(v));
                }
                std::vector<Vertex> sorted = produced;
                std::sort(sorted.begin(), sorted.end());
                bool ok = sorted == base.graph.vertices() &&
                          exp.graph.edge_count() == base.graph.edge_count();
                for (Edge e : exp.graph.edges()) {
                    ok = ok && hamming_distance(produced[e.a], produced[e.b]) == 1;
                }
                if (!ok) {
                    return {false, "generic round trip differs on " +
                                       format_shape(shape) + " coord " +
                                       std::to_string(j)};
                }
                GenericContraction gc = contract_generic(
                    base.graph.to_generic(),
                    Edge(base.graph.index_of(base.root),
                         base.graph.index_of(unit_vertex(shape, j, 1))));
                std::vector<Vertex> fiber_tuples;
                bool fibers_ok = true;
                for (const auto& fiber : gc.fibers) {
                    Vertex proj = base.graph.vertex(fiber.front());
                    proj.erase(proj.begin() + j);
                    for (int member : fiber) {
                        Vertex p = base.graph.vertex(member);
                        p.erase(p.begin() + j);
                        if (p != proj) fibers_ok = false;
                    }
                    fiber_tuples.push_back(std::move(proj));
                }
                std::sort(fiber_tuples.begin(), fiber_tuples.end());
                if (!fibers_ok || fiber_tuples != c.graph.graph.vertices() ||
                    gc.graph.edge_count() != c.graph.graph.edge_count()) {
                    return {false, "clique-contraction oracle disagrees on " +
                                       format_shape(shape) + " coord " +
                                       std::to_string(j)};
                }
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) +
                      " (graph, coordinate) round trips, labeled and generic routes "
                      "identical, oracle agreement, 0 mismatches"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"interval-oracle-equivalence", 10, interval_oracle},
        {"quasi-median-agreement", 60, quasi_median_agreement},
        {"hamming-triangle-condition", 60, hamming_triangle},
        {"c6-counterexample", 1, c6_counterexample},
        {"characterization-biconditional", 300, characterization},
        {"pair-generated-isometry", 120, pair_theorem},
        {"structure-suite", 120, structure_suite},
        {"expansion-characterization", 300, expansion_characterization},
        {"contract-expand-round-trip", 60, round_trip},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        bool ok = out.pass && secs < c.budget_seconds;
        all_ok = all_ok && ok;
        std::printf("[%zu/%zu] %s %s: %s (%.2fs, budget %.0fs)\n", i + 1,
                    criteria.size(), ok ? "PASS" : "FAIL", c.name, out.detail.c_str(),
                    secs, c.budget_seconds);
        std::fflush(stdout);
    }
    std::printf(all_ok ? "ALL %zu CRITERIA PASSED\n" : "CRITERIA FAILED\n",
                criteria.size());
    return all_ok ? 0 : 1;
}
