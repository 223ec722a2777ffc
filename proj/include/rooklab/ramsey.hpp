#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "rooklab/dicolor.hpp"

namespace rooklab {

// k-coloring of the board [1,N]^2, stored row-major like the vertex ids.
struct GridColoring {
    int n = 0;
    int k = 0;
    std::vector<int> cells; // (a-1)*n + (b-1), a = row, b = column

    int at(int a, int b) const { return cells[(a - 1) * n + (b - 1)]; }
    int& at(int a, int b) { return cells[(a - 1) * n + (b - 1)]; }
};

// Axis-parallel square: corners (x,y), (x+t,y), (x,y+t), (x+t,y+t)
// with x = column, y = row, side t >= 1.
struct SquareWitness {
    int x = 0, y = 0, t = 0;
};

/// First monochromatic axis-parallel square in scan order (x, then y, then t).
std::optional<SquareWitness> find_monochromatic_square(const GridColoring& g);

/// Bounds hold and the four corner cells share one color. Malformed
/// witnesses return false, never throw.
bool verify_square_witness(const GridColoring& g, const SquareWitness& w);

struct SquareFreeResult {
    enum class Status { Found, NoneExists, BudgetExceeded };
    Status status = Status::NoneExists;
    GridColoring grid; // meaningful iff status == Found
    std::uint64_t assignments = 0;
};

struct SquareFreeOptions {
    std::uint64_t assignment_budget = std::numeric_limits<std::uint64_t>::max();
    const std::atomic<bool>* cancel = nullptr;
};

// Backtracking over cells in row-major order for a k-coloring of [1,N]^2
// with no monochromatic square. "No such coloring" (exhaustive) and
// "budget ran out" are distinct outcomes.
SquareFreeResult square_free_search(int n, int k, const SquareFreeOptions& opt = {});

/// Identify board cells with digraph vertices along the row-major mapping.
Coloring grid_to_vertex_coloring(const GridColoring& g);
GridColoring vertex_to_grid_coloring(const Coloring& c, int n);

} // namespace rooklab
