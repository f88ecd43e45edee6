#include "daisy/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace daisy {

namespace {

struct LineReader {
    std::istringstream in;
    int line = 0;
    explicit LineReader(const std::string& text) : in(text) {}

    // next non-blank, non-comment line; empty optional at end of input
    std::optional<std::string> next() {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line;
            std::size_t start = raw.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            std::size_t end = raw.find_last_not_of(" \t\r");
            std::string trimmed = raw.substr(start, end - start + 1);
            if (trimmed[0] == '#') continue;
            return trimmed;
        }
        return std::nullopt;
    }

    std::string expect(const std::string& what) {
        auto l = next();
        if (!l) throw ParseError(line, "unexpected end of input, expected " + what);
        return *l;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(line, message);
    }
};

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

long long parse_count(LineReader& r, const std::string& word, const std::string& what) {
    try {
        std::size_t pos = 0;
        long long n = std::stoll(word, &pos);
        if (pos != word.size() || n < 0) r.fail("bad " + what + " '" + word + "'");
        return n;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        r.fail("bad " + what + " '" + word + "'");
    }
}

}  // namespace

GraphDocument GraphDocument::from(const DaisyGraph& d) {
    GraphDocument doc;
    doc.labeled = true;
    doc.shape = d.graph.shape();
    doc.root = format_vertex(d.root);
    for (const Vertex& v : d.graph.vertices()) doc.vertices.push_back(format_vertex(v));
    return doc;
}

GraphDocument GraphDocument::from(const GenericGraph& g, int root) {
    GraphDocument doc;
    doc.labeled = false;
    doc.root = g.display(root);
    for (int v = 0; v < g.vertex_count(); ++v) doc.vertices.push_back(g.display(v));
    std::sort(doc.vertices.begin(), doc.vertices.end());
    for (Edge e : g.edges()) {
        std::string a = g.display(e.a), b = g.display(e.b);
        if (b < a) std::swap(a, b);
        doc.edges.emplace_back(std::move(a), std::move(b));
    }
    std::sort(doc.edges.begin(), doc.edges.end());
    return doc;
}

LabeledGraph GraphDocument::to_labeled() const {
    if (!labeled || !shape) {
        throw std::runtime_error("document does not describe a labeled graph");
    }
    std::vector<Vertex> verts;
    verts.reserve(vertices.size());
    for (const std::string& s : vertices) verts.push_back(parse_vertex(s));
    return LabeledGraph(*shape, std::move(verts));
}

DaisyGraph GraphDocument::to_daisy() const {
    LabeledGraph g = to_labeled();
    return daisy_from_vertices(g.shape(), parse_vertex(root), g.vertices());
}

GenericGraph GraphDocument::to_generic() const {
    if (labeled) return to_labeled().to_generic();
    GenericGraph g(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        g.set_label(static_cast<int>(i), vertices[i]);
    }
    for (const auto& [a, b] : edges) {
        int ia = g.find_label(a);
        int ib = g.find_label(b);
        if (ia < 0 || ib < 0) {
            throw std::runtime_error("edge endpoint '" + (ia < 0 ? a : b) +
                                     "' is not a listed vertex");
        }
        g.add_edge(ia, ib);
    }
    return g;
}

int GraphDocument::generic_root(const GenericGraph& g) const {
    int r = g.find_label(root);
    if (r < 0) throw std::runtime_error("root '" + root + "' is not a listed vertex");
    return r;
}

std::string serialize(const GraphDocument& doc) {
    std::ostringstream os;
    os << "daisygraph " << doc.version << "\n";
    os << "kind " << (doc.labeled ? "labeled" : "generic") << "\n";
    if (doc.labeled) os << "shape " << format_shape(*doc.shape) << "\n";
    os << "root " << doc.root << "\n";
    std::vector<std::string> verts = doc.vertices;
    std::sort(verts.begin(), verts.end());
    if (doc.labeled) {
        // sort tuples numerically, not as strings
        std::vector<Vertex> tuples;
        tuples.reserve(verts.size());
        for (const std::string& s : verts) tuples.push_back(parse_vertex(s));
        std::sort(tuples.begin(), tuples.end());
        verts.clear();
        for (const Vertex& v : tuples) verts.push_back(format_vertex(v));
    }
    os << "vertices " << verts.size() << "\n";
    for (const std::string& v : verts) os << v << "\n";
    if (!doc.labeled) {
        std::vector<std::pair<std::string, std::string>> es = doc.edges;
        std::sort(es.begin(), es.end());
        os << "edges " << es.size() << "\n";
        for (const auto& [a, b] : es) os << a << " " << b << "\n";
    }
    for (const std::string& n : doc.notes) os << "note " << n << "\n";
    return os.str();
}

GraphDocument parse_document(const std::string& text) {
    LineReader r(text);
    GraphDocument doc;

    std::vector<std::string> header = split_words(r.expect("header"));
    if (header.size() != 2 || header[0] != "daisygraph") {
        r.fail("expected 'daisygraph <version>'");
    }
    doc.version = static_cast<int>(parse_count(r, header[1], "version"));
    if (doc.version != 1) r.fail("unsupported version " + header[1]);

    std::vector<std::string> kind = split_words(r.expect("kind"));
    if (kind.size() != 2 || kind[0] != "kind" ||
        (kind[1] != "labeled" && kind[1] != "generic")) {
        r.fail("expected 'kind labeled' or 'kind generic'");
    }
    doc.labeled = kind[1] == "labeled";

    if (doc.labeled) {
        std::vector<std::string> sh = split_words(r.expect("shape"));
        if (sh.size() != 2 || sh[0] != "shape") r.fail("expected 'shape <factors>'");
        try {
            doc.shape = sh[1] == "-" ? Shape{} : parse_shape(sh[1]);
        } catch (const std::exception& e) {
            r.fail(e.what());
        }
    }

    std::vector<std::string> rt = split_words(r.expect("root"));
    if (rt.size() != 2 || rt[0] != "root") r.fail("expected 'root <vertex>'");
    doc.root = rt[1];

    std::vector<std::string> vc = split_words(r.expect("vertex count"));
    if (vc.size() != 2 || vc[0] != "vertices") r.fail("expected 'vertices <count>'");
    long long nverts = parse_count(r, vc[1], "vertex count");
    if (nverts == 0) r.fail("a graph document needs at least one vertex");
    for (long long i = 0; i < nverts; ++i) {
        std::string v = r.expect("a vertex line");
        if (split_words(v).size() != 1) r.fail("bad vertex line '" + v + "'");
        if (doc.labeled) {
            try {
                doc.shape->require(parse_vertex(v));
            } catch (const std::exception& e) {
                r.fail(e.what());
            }
        }
        doc.vertices.push_back(v);
    }

    std::optional<std::string> tail = r.next();
    if (!doc.labeled) {
        if (!tail) r.fail("expected 'edges <count>'");
        std::vector<std::string> ec = split_words(*tail);
        if (ec.size() != 2 || ec[0] != "edges") r.fail("expected 'edges <count>'");
        long long nedges = parse_count(r, ec[1], "edge count");
        for (long long i = 0; i < nedges; ++i) {
            std::vector<std::string> e = split_words(r.expect("an edge line"));
            if (e.size() != 2) r.fail("bad edge line");
            doc.edges.emplace_back(e[0], e[1]);
        }
        tail = r.next();
    }
    while (tail) {
        if (tail->rfind("note", 0) == 0 &&
            (tail->size() == 4 || (*tail)[4] == ' ')) {
            doc.notes.push_back(tail->size() > 5 ? tail->substr(5) : "");
        } else {
            r.fail("unexpected line '" + *tail + "'");
        }
        tail = r.next();
    }

    if (doc.labeled) doc.shape->require(parse_vertex(doc.root));
    return doc;
}

GraphDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

void save_document(const GraphDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize(doc);
}

// --- decomposition scripts ----------------------------------------------------

std::string serialize(const Decomposition& dec) {
    std::ostringstream os;
    os << "daisyscript 1\n";
    os << "shape " << format_shape(dec.shape) << "\n";
    os << "root " << format_vertex(dec.root) << "\n";
    os << "steps " << dec.steps.size() << "\n";
    for (std::size_t t = 0; t < dec.steps.size(); ++t) {
        const DecomposeStep& s = dec.steps[t];
        os << "step " << t << " coord " << s.coord << " values " << s.covers.size()
           << "\n";
        for (std::size_t l = 0; l < s.covers.size(); ++l) {
            os << "cover " << l << " :";
            for (const Vertex& v : s.covers[l]) os << " " << format_vertex(v);
            os << "\n";
        }
    }
    return os.str();
}

Decomposition parse_script(const std::string& text) {
    LineReader r(text);
    std::vector<std::string> header = split_words(r.expect("header"));
    if (header.size() != 2 || header[0] != "daisyscript" || header[1] != "1") {
        r.fail("expected 'daisyscript 1'");
    }
    std::vector<std::string> sh = split_words(r.expect("shape"));
    if (sh.size() != 2 || sh[0] != "shape") r.fail("expected 'shape <factors>'");
    Decomposition dec;
    try {
        dec.shape = sh[1] == "-" ? Shape{} : parse_shape(sh[1]);
    } catch (const std::exception& e) {
        r.fail(e.what());
    }
    std::vector<std::string> rt = split_words(r.expect("root"));
    if (rt.size() != 2 || rt[0] != "root") r.fail("expected 'root <vertex>'");
    dec.root = parse_vertex(rt[1]);

    std::vector<std::string> sc = split_words(r.expect("step count"));
    if (sc.size() != 2 || sc[0] != "steps") r.fail("expected 'steps <count>'");
    long long steps = parse_count(r, sc[1], "step count");
    for (long long t = 0; t < steps; ++t) {
        std::vector<std::string> st = split_words(r.expect("a step line"));
        if (st.size() != 6 || st[0] != "step" || st[2] != "coord" || st[4] != "values") {
            r.fail("expected 'step <t> coord <j> values <k>'");
        }
        if (parse_count(r, st[1], "step index") != t) r.fail("step index out of order");
        DecomposeStep step;
        step.coord = static_cast<int>(parse_count(r, st[3], "coordinate"));
        long long values = parse_count(r, st[5], "value count");
        if (values < 2) r.fail("a step needs at least two covers");
        for (long long l = 0; l < values; ++l) {
            std::vector<std::string> cv = split_words(r.expect("a cover line"));
            if (cv.size() < 3 || cv[0] != "cover" || cv[2] != ":") {
                r.fail("expected 'cover <l> : <vertices>'");
            }
            if (parse_count(r, cv[1], "cover index") != l) {
                r.fail("cover index out of order");
            }
            std::vector<Vertex> cover;
            for (std::size_t i = 3; i < cv.size(); ++i) {
                try {
                    cover.push_back(parse_vertex(cv[i]));
                } catch (const std::exception& e) {
                    r.fail(e.what());
                }
            }
            if (cover.empty()) r.fail("cover " + cv[1] + " is empty");
            step.covers.push_back(std::move(cover));
        }
        dec.steps.push_back(std::move(step));
    }
    if (r.next()) r.fail("trailing content after the last step");
    return dec;
}

Decomposition load_script(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_script(ss.str());
}

// --- DOT export -----------------------------------------------------------------

namespace {

const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                          "#ff7f00", "#a65628", "#f781bf", "#999999"};

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const LabeledGraph& g, const std::optional<Vertex>& root) {
    std::ostringstream os;
    os << "graph daisy {\n";
    os << "  // shape " << format_shape(g.shape()) << "\n";
    os << "  node [shape=ellipse];\n";
    for (int i = 0; i < g.size(); ++i) {
        os << "  " << quoted(format_vertex(g.vertex(i)));
        if (root && g.vertex(i) == *root) os << " [style=filled]";
        os << ";\n";
    }
    std::vector<EdgeClass> classes = delta_classes(g, root);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        os << "  // edge class " << c;
        if (classes[c].anchor) {
            os << " anchored at " << format_vertex(g.vertex(classes[c].anchor->a))
               << "--" << format_vertex(g.vertex(classes[c].anchor->b));
        }
        os << "\n";
        const char* color = kPalette[c % (sizeof(kPalette) / sizeof(kPalette[0]))];
        for (Edge e : classes[c].edges) {
            os << "  " << quoted(format_vertex(g.vertex(e.a))) << " -- "
               << quoted(format_vertex(g.vertex(e.b))) << " [color=" << quoted(color)
               << "];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const GenericGraph& g) {
    std::ostringstream os;
    os << "graph daisy {\n";
    os << "  node [shape=ellipse];\n";
    for (int v = 0; v < g.vertex_count(); ++v) os << "  " << quoted(g.display(v)) << ";\n";
    for (Edge e : g.edges()) {
        os << "  " << quoted(g.display(e.a)) << " -- " << quoted(g.display(e.b))
           << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace daisy
