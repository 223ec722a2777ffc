#include "rooklab/satenc.hpp"

#include <sstream>
#include <stdexcept>

namespace rooklab {

std::pair<CnfFormula, VarMap> encode_dicoloring(const Digraph& d, int k) {
    if (k < 1) throw std::invalid_argument("encode_dicoloring: k must be >= 1");
    const int n = d.vertex_count();
    VarMap vm{n, k};
    CnfFormula f;
    f.var_count = vm.var_count();
    f.clauses.reserve(dicoloring_clause_count(n, d.arc_count(), k));

    // 1. color constraints
    for (int v = 0; v < n; ++v) {
        std::vector<int> alo(k);
        for (int c = 0; c < k; ++c) alo[c] = vm.color_var(v, c);
        f.clauses.push_back(std::move(alo));
    }
    for (int v = 0; v < n; ++v)
        for (int c1 = 0; c1 < k; ++c1)
            for (int c2 = c1 + 1; c2 < k; ++c2)
                f.clauses.push_back({-vm.color_var(v, c1), -vm.color_var(v, c2)});

    // 2. strict order: antisymmetry, then transitivity over all triples
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            f.clauses.push_back({-vm.order_var(u, v), -vm.order_var(v, u)});
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                f.clauses.push_back({-vm.order_var(u, v), -vm.order_var(v, w),
                                     vm.order_var(u, w)});
            }
        }

    // 3. arcs respect the order inside a color class
    for (const auto& [u, v] : d.arcs())
        for (int c = 0; c < k; ++c)
            f.clauses.push_back({-vm.color_var(u, c), -vm.color_var(v, c),
                                 vm.order_var(u, v)});

    return {std::move(f), vm};
}

std::uint64_t dicoloring_clause_count(int n, std::uint64_t m, int k) {
    const std::uint64_t un = n, uk = k;
    const std::uint64_t colors = un + un * (uk * (uk - 1) / 2);
    const std::uint64_t order = un * (un - 1) / 2 + un * (un - 1) * (un - 2);
    const std::uint64_t arcs = m * uk;
    return colors + order + arcs;
}

std::string write_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.var_count << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

Model parse_model(const std::string& text, int var_count) {
    Model model(var_count + 1, false);
    std::vector<bool> assigned(var_count + 1, false);
    std::istringstream in(text);
    std::string line;
    bool done = false;
    while (!done && std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        bool first = true;
        while (ls >> tok) {
            if (first && (tok == "c" || tok == "s")) break; // comment/status line
            first = false;
            if (tok == "v") continue;
            int lit;
            try {
                lit = std::stoi(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_model: bad token '" + tok + "'");
            }
            if (lit == 0) { done = true; break; }
            const int var = lit > 0 ? lit : -lit;
            if (var > var_count)
                throw std::invalid_argument("parse_model: literal " + tok +
                                            " outside 1.." + std::to_string(var_count));
            model[var] = lit > 0;
            assigned[var] = true;
        }
    }
    for (int v = 1; v <= var_count; ++v)
        if (!assigned[v])
            throw std::invalid_argument("parse_model: variable " + std::to_string(v) +
                                        " unassigned");
    return model;
}

Coloring decode_model(const Model& model, const VarMap& vm) {
    if (static_cast<int>(model.size()) < vm.var_count() + 1)
        throw std::invalid_argument("decode_model: model smaller than the variable map");
    Coloring result;
    result.k = vm.k;
    result.colors.assign(vm.n, -1);
    for (int v = 0; v < vm.n; ++v) {
        for (int c = 0; c < vm.k; ++c) {
            if (!model[vm.color_var(v, c)]) continue;
            if (result.colors[v] != -1)
                throw std::invalid_argument("decode_model: vertex " + std::to_string(v) +
                                            " has two true color variables");
            result.colors[v] = c;
        }
        if (result.colors[v] == -1)
            throw std::invalid_argument("decode_model: vertex " + std::to_string(v) +
                                        " has no true color variable");
    }
    return result;
}

} // namespace rooklab
