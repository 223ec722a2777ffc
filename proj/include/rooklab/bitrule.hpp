#pragma once

#include <cstdint>
#include <compare>

#include "rooklab/digraph.hpp"

namespace rooklab {

// Board cell (a,b), 1-based coordinates: a = row, b = column, both in [1,N].
struct CellCoord {
    int a = 0;
    int b = 0;
    auto operator<=>(const CellCoord&) const = default;
};

enum class Direction { Forward, Backward };

/// Coefficient of 2^i in the binary expansion of n.
int bit(std::uint64_t n, int i);

/// Least index where the binary expansions of x and y differ. Requires x != y.
int lsb_diff(std::uint64_t x, std::uint64_t y);

/// Largest j with 2^j dividing m. Requires m >= 1.
/// For x != y, two_adic_valuation(|x - y|) == lsb_diff(x, y).
int two_adic_valuation(std::uint64_t m);

// Row rule: the edge between (a,b) and (a,d) points from (a,b) to (a,d)
// iff bit(b,i) == bit(a,i), where i = lsb_diff(b,d).
// Forward means arc (a,b) -> (a,d). Requires b != d.
Direction orient_row(std::uint64_t a, std::uint64_t b, std::uint64_t d);

// Column rule: the edge between (a,b) and (c,b) points from (a,b) to (c,b)
// iff bit(b,i) != bit(a,i), where i = lsb_diff(a,c).
// Forward means arc (a,b) -> (c,b). Requires a != c.
Direction orient_col(std::uint64_t b, std::uint64_t a, std::uint64_t c);

/// True iff lsb_diff(a,c) == lsb_diff(b,d), i.e. rows a,c and columns b,d are
/// at equal dyadic distance. |a-c| == |b-d| implies this.
bool generalized_square_predicate(std::uint64_t a, std::uint64_t c,
                                  std::uint64_t b, std::uint64_t d);

// The oriented rook graph on [1,N]^2. Vertex ids are row-major:
// (a,b) <-> (a-1)*N + (b-1).
struct RookDigraph {
    int n = 0;       // board size N
    Digraph graph;   // N^2 vertices, N^2*(N-1) arcs

    int vertex_id(CellCoord c) const { return (c.a - 1) * n + (c.b - 1); }
    CellCoord cell_of(int v) const { return {v / n + 1, v % n + 1}; }
};

/// Orient every rook edge of the N x N board. Requires N >= 1.
RookDigraph build_rook_digraph(int n);

} // namespace rooklab
