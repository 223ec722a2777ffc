#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rooklab/dicolor.hpp"
#include "rooklab/digraph.hpp"

namespace rooklab {

// Clause list over variables 1..var_count; literal sign = polarity.
struct CnfFormula {
    int var_count = 0;
    std::vector<std::vector<int>> clauses;
};

// Variable layout for the acyclic k-coloring encoding:
//   color_var(v,c)  = v*k + c + 1                      (n*k variables)
//   order_var(u,v)  = n*k + u*(n-1) + v' + 1, v' = v - (v > u)   (n*(n-1) variables)
// order_var(u,v) reads "u precedes v" in one global strict order.
struct VarMap {
    int n = 0;
    int k = 0;

    int color_var(int v, int c) const { return v * k + c + 1; }
    int order_var(int u, int v) const {
        return n * k + u * (n - 1) + (v > u ? v - 1 : v) + 1;
    }
    int var_count() const { return n * k + n * (n - 1); }
};

// CNF satisfiable iff d has an acyclic k-coloring. Clause families:
//   1. each vertex has some color; no vertex has two colors
//   2. antisymmetry and transitivity of the order variables
//   3. for every arc (u,v) and color c: same color implies u precedes v
// One order shared by all classes is enough: the classes partition the
// vertices, so the union of the class subdigraphs is a vertex-disjoint union
// of DAGs, and any topological order of that union serves every class at once.
std::pair<CnfFormula, VarMap> encode_dicoloring(const Digraph& d, int k);

/// Exact clause count of encode_dicoloring(d, k), per family, in closed form.
std::uint64_t dicoloring_clause_count(int n, std::uint64_t m, int k);

/// Standard DIMACS CNF text, deterministic clause order.
std::string write_dimacs(const CnfFormula& f);

// Truth assignment indexed by variable (entry 0 unused).
using Model = std::vector<bool>;

/// Parse a model file: whitespace-separated signed literals, optional "v"
/// prefixes, "c"/"s" lines tolerated, optional terminating 0.
/// Every variable in 1..var_count must be assigned.
Model parse_model(const std::string& text, int var_count);

/// Color of each vertex = the unique c with color_var(v,c) true.
/// Throws if some vertex has zero or several true color variables.
Coloring decode_model(const Model& model, const VarMap& vm);

} // namespace rooklab
