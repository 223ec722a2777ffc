#include "rooklab/formats.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace rooklab {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    return in;
}

void write_text_file(const std::string& text, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

// One "<int> <int>" line with nothing else on it.
std::pair<long long, long long> parse_int_pair(const std::string& line, int lineno) {
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a >> b)) throw ParseError(lineno, "expected two integers, got '" + line + "'");
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing content '" + rest + "'");
    return {a, b};
}

} // namespace

Digraph read_arc_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "empty input, expected header");
    ++lineno;
    std::istringstream hs(line);
    std::string magic;
    long long n = -1, m = -1;
    if (!(hs >> magic >> n >> m) || magic != "digraph")
        throw ParseError(lineno, "expected header 'digraph <n> <m>', got '" + line + "'");
    if (n < 0 || m < 0) throw ParseError(lineno, "negative count in header");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw ParseError(lineno + 1, "expected " + std::to_string(m) +
                                             " arc lines, file ends after " +
                                             std::to_string(i));
        ++lineno;
        auto [u, v] = parse_int_pair(line, lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex id out of range [0," + std::to_string(n) + ")");
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string extra;
    while (std::getline(in, extra)) {
        ++lineno;
        if (!extra.empty() && extra.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError(lineno, "unexpected content after " + std::to_string(m) + " arcs");
    }
    Digraph d = Digraph::from_arcs(static_cast<int>(n), arcs);
    if (d.arc_count() != static_cast<int>(m))
        throw ParseError(lineno, "duplicate arcs: header claims " + std::to_string(m) +
                                     ", only " + std::to_string(d.arc_count()) + " distinct");
    return d;
}

Digraph read_arc_list_file(const std::string& path) {
    auto in = open_input(path);
    return read_arc_list(in);
}

std::string write_arc_list(const Digraph& d) {
    std::ostringstream out;
    out << "digraph " << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

void write_arc_list_file(const Digraph& d, const std::string& path) {
    write_text_file(write_arc_list(d), path);
}

Coloring read_coloring(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "empty input, expected header");
    ++lineno;
    std::istringstream hs(line);
    std::string magic;
    long long n = -1, k = -1;
    if (!(hs >> magic >> n >> k) || magic != "coloring")
        throw ParseError(lineno, "expected header 'coloring <n> <k>', got '" + line + "'");
    if (n < 0 || k < 0) throw ParseError(lineno, "negative count in header");
    Coloring c;
    c.k = static_cast<int>(k);
    c.colors.assign(static_cast<std::size_t>(n), -1);
    for (long long i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw ParseError(lineno + 1, "expected " + std::to_string(n) +
                                             " vertex lines, file ends after " +
                                             std::to_string(i));
        ++lineno;
        auto [v, col] = parse_int_pair(line, lineno);
        if (v < 0 || v >= n) throw ParseError(lineno, "vertex id out of range");
        if (col < 0 || col >= k)
            throw ParseError(lineno, "color " + std::to_string(col) + " out of range [0," +
                                         std::to_string(k) + ")");
        if (c.colors[v] != -1) throw ParseError(lineno, "vertex " + std::to_string(v) +
                                                            " colored twice");
        c.colors[v] = static_cast<int>(col);
    }
    return c;
}

Coloring read_coloring_file(const std::string& path) {
    auto in = open_input(path);
    return read_coloring(in);
}

std::string write_coloring(const Coloring& c) {
    std::ostringstream out;
    out << "coloring " << c.colors.size() << ' ' << c.k << '\n';
    for (std::size_t v = 0; v < c.colors.size(); ++v) out << v << ' ' << c.colors[v] << '\n';
    return out.str();
}

void write_coloring_file(const Coloring& c, const std::string& path) {
    write_text_file(write_coloring(c), path);
}

std::string write_dot(const Digraph& d, std::optional<int> rook_n) {
    if (rook_n && *rook_n * *rook_n != d.vertex_count())
        throw std::invalid_argument("write_dot: digraph has " +
                                    std::to_string(d.vertex_count()) +
                                    " vertices, not a " + std::to_string(*rook_n) + "x" +
                                    std::to_string(*rook_n) + " board");
    std::ostringstream out;
    out << "digraph D {\n";
    for (int v = 0; v < d.vertex_count(); ++v) {
        out << "  v" << v << " [label=\"";
        if (rook_n)
            out << '(' << (v / *rook_n + 1) << ',' << (v % *rook_n + 1) << ')';
        else
            out << v;
        out << "\"];\n";
    }
    for (const auto& [u, v] : d.arcs()) out << "  v" << u << " -> v" << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace rooklab
