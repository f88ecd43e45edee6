#include "daisy/shape.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace daisy {

Shape::Shape(std::vector<int> factors) : factors_(std::move(factors)) {
    for (int k : factors_) {
        if (k < 2) {
            throw std::invalid_argument("shape factor must be >= 2, got " +
                                        std::to_string(k));
        }
    }
}

int Shape::factor(int coord) const {
    if (coord < 0 || coord >= dim()) {
        throw std::invalid_argument("coordinate " + std::to_string(coord) +
                                    " out of range for shape " + format_shape(*this));
    }
    return factors_[coord];
}

long long Shape::vertex_count() const {
    long long n = 1;
    for (int k : factors_) n *= k;
    return n;
}

bool Shape::contains(const Vertex& v) const {
    if (static_cast<int>(v.size()) != dim()) return false;
    for (int j = 0; j < dim(); ++j) {
        if (v[j] < 0 || v[j] >= factors_[j]) return false;
    }
    return true;
}

void Shape::require(const Vertex& v) const {
    if (!contains(v)) {
        throw std::invalid_argument("vertex " + format_vertex(v) +
                                    " is not valid under shape " + format_shape(*this));
    }
}

int hamming_distance(const Vertex& u, const Vertex& v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("vertices " + format_vertex(u) + " and " +
                                    format_vertex(v) + " have different arity");
    }
    int d = 0;
    for (std::size_t j = 0; j < u.size(); ++j) d += (u[j] != v[j]);
    return d;
}

bool hamming_adjacent(const Vertex& u, const Vertex& v) {
    return hamming_distance(u, v) == 1;
}

std::vector<Vertex> hamming_interval(const Vertex& u, const Vertex& v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("vertices " + format_vertex(u) + " and " +
                                    format_vertex(v) + " have different arity");
    }
    std::vector<Vertex> out;
    out.push_back(u);
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] == v[j]) continue;
        std::size_t have = out.size();
        for (std::size_t t = 0; t < have; ++t) {
            Vertex w = out[t];
            w[j] = v[j];
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Vertex unit_vertex(const Shape& shape, int coord, int value) {
    if (coord < 0 || coord >= shape.dim()) {
        throw std::invalid_argument("coordinate " + std::to_string(coord) +
                                    " out of range for shape " + format_shape(shape));
    }
    if (value < 0 || value >= shape.factor(coord)) {
        throw std::invalid_argument("value " + std::to_string(value) +
                                    " out of range for coordinate " +
                                    std::to_string(coord) + " of shape " +
                                    format_shape(shape));
    }
    Vertex v = shape.zero();
    v[coord] = value;
    return v;
}

std::vector<Vertex> enumerate_vertices(const Shape& shape, long long budget) {
    long long total = shape.vertex_count();
    if (total > budget) {
        throw std::invalid_argument("shape " + format_shape(shape) + " has " +
                                    std::to_string(total) +
                                    " vertices, exceeding the enumeration budget of " +
                                    std::to_string(budget));
    }
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(total));
    Vertex v = shape.zero();
    for (long long i = 0; i < total; ++i) {
        out.push_back(v);
        for (int j = shape.dim() - 1; j >= 0; --j) {
            if (++v[j] < shape.factor(j)) break;
            v[j] = 0;
        }
    }
    return out;
}

std::string format_vertex(const Vertex& v) {
    if (v.empty()) return "-";
    std::string s;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(v[j]);
    }
    return s;
}

std::string format_shape(const Shape& s) {
    return format_vertex(s.factors());
}

Vertex parse_vertex(const std::string& text) {
    if (text == "-") return {};
    Vertex v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int value;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coordinate '" + item + "' in tuple '" +
                                        text + "'");
        }
        if (pos != item.size() || value < 0) {
            throw std::invalid_argument("bad coordinate '" + item + "' in tuple '" +
                                        text + "'");
        }
        v.push_back(value);
    }
    if (v.empty()) {
        throw std::invalid_argument("empty tuple '" + text + "'");
    }
    return v;
}

Shape parse_shape(const std::string& text) {
    return Shape(parse_vertex(text));
}

}  // namespace daisy
