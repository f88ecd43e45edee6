// Command-line front end for daisy graph construction, checking, class
// computation, expansion/contraction, decomposition, verification and export.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "daisy/document.hpp"
#include "daisy/verify.hpp"

namespace {

using namespace daisy;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

std::vector<Vertex> parse_tuple_list(const std::vector<std::string>& tokens) {
    std::vector<Vertex> out;
    out.reserve(tokens.size());
    for (const std::string& t : tokens) out.push_back(parse_vertex(t));
    return out;
}

std::vector<Vertex> parse_cover(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string w;
    while (in >> w) tokens.push_back(w);
    if (tokens.empty()) throw std::runtime_error("empty cover set");
    return parse_tuple_list(tokens);
}

void write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

int cmd_build(const std::string& shape_text, const std::string& root_text,
              const std::vector<std::string>& gens, const std::string& out_path) {
    Shape shape = shape_text == "-" ? Shape{} : parse_shape(shape_text);
    Vertex root = root_text.empty() ? shape.zero() : parse_vertex(root_text);
    DaisyGraph d = build_daisy(shape, root, parse_tuple_list(gens));
    GraphDocument doc = GraphDocument::from(d);
    std::ostream& info = out_path.empty() ? std::cerr : std::cout;
    info << "shape " << format_shape(shape) << ", root " << format_vertex(root) << "\n";
    info << "vertices " << d.graph.size() << ", edges " << d.graph.edge_count() << "\n";
    info << "canonical generators:";
    for (const Vertex& g : d.generators) info << " " << format_vertex(g);
    info << "\n";
    write_or_print(serialize(doc), out_path);
    return kExitOk;
}

int cmd_check(const std::string& in_path) {
    GraphDocument doc = load_document(in_path);
    if (!doc.labeled) {
        throw std::runtime_error(
            "check needs a labeled document (generic graphs have no implicit host)");
    }
    LabeledGraph g = doc.to_labeled();
    Vertex root = parse_vertex(doc.root);
    bool ok = true;

    DaisyCheck chk = is_daisy(g.shape(), g.vertices(), root);
    std::cout << "daisy: " << (chk.is_daisy ? "yes" : "no");
    if (!chk.is_daisy) {
        std::cout << " (witness " << format_vertex(*chk.witness)
                  << ", its interval to the root is not contained)";
        ok = false;
    }
    std::cout << "\n";

    IsometryReport iso = is_isometric(g);
    std::cout << "isometric: " << (iso.isometric ? "yes" : "no");
    if (!iso.isometric) {
        std::cout << " (pair " << format_vertex(iso.witness->first) << " / "
                  << format_vertex(iso.witness->second) << ", subgraph "
                  << (iso.sub_distance < 0 ? std::string("unreachable")
                                           : std::to_string(iso.sub_distance))
                  << " vs host " << iso.host_distance << ")";
        ok = false;
    }
    std::cout << "\n";

    if (chk.is_daisy && root == g.shape().zero()) {
        DaisyGraph d = daisy_from_vertices(g.shape(), root, g.vertices());
        MinimalHostResult min = canonical_minimal_host(d);
        std::cout << "minimal host: " << (min.identity ? "yes" : "no");
        if (!min.identity) {
            std::cout << " (canonical shape "
                      << format_shape(min.canonical.graph.shape()) << ")";
        }
        std::cout << "\n";
    } else {
        std::cout << "minimal host: not applicable\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_classes(const std::string& in_path) {
    GraphDocument doc = load_document(in_path);
    if (doc.labeled) {
        LabeledGraph g = doc.to_labeled();
        Vertex root = parse_vertex(doc.root);
        std::optional<Vertex> anchor_root;
        if (g.contains(root)) anchor_root = root;
        std::vector<EdgeClass> classes = delta_classes(g, anchor_root);
        std::cout << classes.size() << " delta classes\n";
        for (std::size_t c = 0; c < classes.size(); ++c) {
            std::cout << "class " << c << ": " << classes[c].edges.size() << " edges";
            if (classes[c].anchor) {
                std::cout << ", anchored at "
                          << format_vertex(g.vertex(classes[c].anchor->a)) << "--"
                          << format_vertex(g.vertex(classes[c].anchor->b));
            }
            std::cout << "\n";
            for (Edge e : classes[c].edges) {
                std::cout << "  " << format_vertex(g.vertex(e.a)) << " -- "
                          << format_vertex(g.vertex(e.b)) << "\n";
            }
        }
    } else {
        GenericGraph g = doc.to_generic();
        std::vector<EdgeClass> classes = delta_classes(g);
        std::cout << classes.size() << " delta classes\n";
        for (std::size_t c = 0; c < classes.size(); ++c) {
            std::cout << "class " << c << ": " << classes[c].edges.size() << " edges\n";
            for (Edge e : classes[c].edges) {
                std::cout << "  " << g.display(e.a) << " -- " << g.display(e.b) << "\n";
            }
        }
    }
    return kExitOk;
}

int cmd_expand(const std::string& in_path, const std::string& script_path,
               const std::vector<std::string>& cover_texts, int position,
               const std::string& out_path) {
    if (!script_path.empty()) {
        Decomposition dec = load_script(script_path);
        DaisyGraph result = replay(dec);
        write_or_print(serialize(GraphDocument::from(result)), out_path);
        return kExitOk;
    }
    if (in_path.empty()) {
        throw std::runtime_error("expand needs an input document or --script");
    }
    if (cover_texts.empty()) {
        throw std::runtime_error("expand needs at least one --cover set");
    }
    GraphDocument doc = load_document(in_path);
    DaisyGraph base = doc.to_daisy();
    std::vector<std::vector<Vertex>> covers{base.graph.vertices()};
    for (const std::string& text : cover_texts) covers.push_back(parse_cover(text));
    DaisyGraph result = position == 0
                            ? daisy_peripheral_expand(base, covers)
                            : daisy_peripheral_expand_at(base, covers, position);
    std::ostream& info = out_path.empty() ? std::cerr : std::cout;
    info << "expanded to shape " << format_shape(result.graph.shape()) << ", "
         << result.graph.size() << " vertices\n";
    write_or_print(serialize(GraphDocument::from(result)), out_path);
    return kExitOk;
}

int cmd_contract(const std::string& in_path, int coord, const std::string& out_path) {
    GraphDocument doc = load_document(in_path);
    DaisyGraph d = doc.to_daisy();
    ContractionResult res = contract(d, coord);
    std::ostream& info = out_path.empty() ? std::cerr : std::cout;
    info << "contracted coordinate " << coord << " to shape "
         << format_shape(res.graph.graph.shape()) << "\n";
    for (std::size_t l = 0; l < res.covers.size(); ++l) {
        info << "cover " << l << " :";
        for (const Vertex& v : res.covers[l]) info << " " << format_vertex(v);
        info << "\n";
    }
    write_or_print(serialize(GraphDocument::from(res.graph)), out_path);
    return kExitOk;
}

int cmd_decompose(const std::string& in_path, const std::string& out_path) {
    GraphDocument doc = load_document(in_path);
    DaisyGraph d = doc.to_daisy();
    Decomposition dec = decompose_to_k1(d);
    std::ostream& info = out_path.empty() ? std::cerr : std::cout;
    info << dec.steps.size() << " contraction steps to the one-vertex graph\n";
    write_or_print(serialize(dec), out_path);
    return kExitOk;
}

int cmd_verify(const std::string& suite, unsigned long long seed, long long budget,
               int samples, const std::string& format, const std::string& out_path,
               bool timings) {
    verify::HarnessOptions opt = suite == "quick"
                                     ? verify::HarnessOptions::quick_suite()
                                     : verify::HarnessOptions::full();
    if (seed) opt.seed = seed;
    if (budget) opt.characterization_host_vertices = budget;
    if (samples) opt.expansion_samples = samples;
    std::vector<verify::CheckReport> reports = verify::run_suite(opt);
    std::string rendered = format == "json"
                               ? verify::render_json(reports, opt, timings)
                               : verify::render_text(reports, opt, timings);
    write_or_print(rendered, out_path);
    bool ok = verify::all_passed(reports);
    if (!out_path.empty()) {
        std::cout << (ok ? "all checks passed" : "CHECK FAILURES, see report") << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_export(const std::string& in_path, const std::string& out_path) {
    GraphDocument doc = load_document(in_path);
    std::string dot;
    if (doc.labeled) {
        LabeledGraph g = doc.to_labeled();
        Vertex root = parse_vertex(doc.root);
        std::optional<Vertex> style_root;
        if (g.contains(root)) style_root = root;
        dot = to_dot(g, style_root);
    } else {
        dot = to_dot(doc.to_generic());
    }
    write_or_print(dot, out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"daisy graphs of Hamming graphs: construction, isometry checking, "
                 "delta classes, expansion and contraction, verification"};
    app.require_subcommand(1);

    std::string shape_text, root_text, in_path, out_path, script_path;
    std::vector<std::string> gens, covers;
    int coord = 0;
    std::string suite = "quick", format = "text";
    unsigned long long seed = 0;
    long long budget = 0;
    int samples = 0;
    bool timings = false;

    CLI::App* build = app.add_subcommand("build", "build a daisy graph from generators");
    build->add_option("--shape", shape_text, "factor sizes, e.g. 3,3 ('-' for none)")
        ->required();
    build->add_option("--root", root_text, "root vertex (default 0^n)");
    build->add_option("--gen", gens, "generator vertex (repeatable)")->required();
    build->add_option("--out", out_path, "output document path (default stdout)");

    CLI::App* check = app.add_subcommand("check", "check daisy/isometry/minimal-host");
    check->add_option("input", in_path, "graph document")->required();

    CLI::App* classes = app.add_subcommand("classes", "list delta classes");
    classes->add_option("input", in_path, "graph document")->required();

    CLI::App* expand = app.add_subcommand("expand", "daisy peripheral expansion or replay");
    expand->add_option("input", in_path, "base graph document");
    expand->add_option("--cover", covers,
                       "extra cover set: space-separated tuples (repeatable); "
                       "cover 0 is always the full vertex set");
    expand->add_option("--coord", coord, "position of the new coordinate (default 0)");
    expand->add_option("--script", script_path, "replay a decomposition script");
    expand->add_option("--out", out_path, "output document path (default stdout)");

    CLI::App* contract_cmd = app.add_subcommand("contract", "contract one coordinate");
    contract_cmd->add_option("input", in_path, "graph document")->required();
    contract_cmd->add_option("--coord", coord, "coordinate to contract (0-based)")
        ->required();
    contract_cmd->add_option("--out", out_path, "output document path (default stdout)");

    CLI::App* decompose = app.add_subcommand("decompose",
                                             "contract down to the one-vertex graph");
    decompose->add_option("input", in_path, "graph document")->required();
    decompose->add_option("--out", out_path, "output script path (default stdout)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_option("--suite", suite, "quick or full (default quick)")
        ->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_option("--seed", seed, "seed for sampled cover families");
    verify_cmd->add_option("--budget", budget,
                           "max host vertices for the characterization scan");
    verify_cmd->add_option("--samples", samples, "sampled cover families per base");
    verify_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--out", out_path, "report path (default stdout)");
    verify_cmd->add_flag("--timings", timings, "include wall times in the report");

    CLI::App* export_cmd = app.add_subcommand("export", "export to DOT");
    export_cmd->add_option("input", in_path, "graph document")->required();
    export_cmd->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (build->parsed()) return cmd_build(shape_text, root_text, gens, out_path);
        if (check->parsed()) return cmd_check(in_path);
        if (classes->parsed()) return cmd_classes(in_path);
        if (expand->parsed()) {
            return cmd_expand(in_path, script_path, covers, coord, out_path);
        }
        if (contract_cmd->parsed()) return cmd_contract(in_path, coord, out_path);
        if (decompose->parsed()) return cmd_decompose(in_path, out_path);
        if (verify_cmd->parsed()) {
            return cmd_verify(suite, seed, budget, samples, format, out_path, timings);
        }
        if (export_cmd->parsed()) return cmd_export(in_path, out_path);
    } catch (const std::exception& e) {
        std::cerr << "daisy: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
