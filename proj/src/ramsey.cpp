#include "rooklab/ramsey.hpp"

#include <stdexcept>
#include <string>

namespace rooklab {

std::optional<SquareWitness> find_monochromatic_square(const GridColoring& g) {
    const int n = g.n;
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) {
            const int tmax = n - std::max(x, y);
            for (int t = 1; t <= tmax; ++t) {
                const int c = g.at(y, x);
                if (g.at(y, x + t) == c && g.at(y + t, x) == c && g.at(y + t, x + t) == c)
                    return SquareWitness{x, y, t};
            }
        }
    return std::nullopt;
}

bool verify_square_witness(const GridColoring& g, const SquareWitness& w) {
    if (w.x < 1 || w.y < 1 || w.t < 1) return false;
    if (w.x + w.t > g.n || w.y + w.t > g.n) return false;
    const int c = g.at(w.y, w.x);
    return g.at(w.y, w.x + w.t) == c && g.at(w.y + w.t, w.x) == c &&
           g.at(w.y + w.t, w.x + w.t) == c;
}

SquareFreeResult square_free_search(int n, int k, const SquareFreeOptions& opt) {
    if (n < 1) throw std::invalid_argument("square_free_search: N must be >= 1");
    if (k < 1) throw std::invalid_argument("square_free_search: k must be >= 1");
    SquareFreeResult res;
    res.grid = GridColoring{n, k, std::vector<int>(static_cast<std::size_t>(n) * n, -1)};

    // Assigning cell (a,b) can only complete squares whose bottom-right
    // corner is (a,b); everything else is still open.
    auto closes_square = [&](int a, int b) {
        const int c = res.grid.at(a, b);
        for (int t = 1; t < std::min(a, b); ++t)
            if (res.grid.at(a - t, b - t) == c && res.grid.at(a - t, b) == c &&
                res.grid.at(a, b - t) == c)
                return true;
        return false;
    };

    const int total = n * n;
    std::uint64_t used = 0;
    // cell index -> (a,b) in row-major order
    auto rec = [&](auto&& self, int idx) -> int { // 1 found, 0 exhausted, -1 budget
        if (idx == total) return 1;
        const int a = idx / n + 1, b = idx % n + 1;
        for (int c = 0; c < k; ++c) {
            if (used >= opt.assignment_budget) return -1;
            if (opt.cancel && ((used & 4095) == 0) &&
                opt.cancel->load(std::memory_order_relaxed))
                return -1;
            ++used;
            res.grid.at(a, b) = c;
            if (!closes_square(a, b)) {
                const int sub = self(self, idx + 1);
                if (sub != 0) return sub;
            }
            res.grid.at(a, b) = -1;
        }
        return 0;
    };
    const int outcome = rec(rec, 0);
    res.assignments = used;
    switch (outcome) {
        case 1: res.status = SquareFreeResult::Status::Found; break;
        case 0: res.status = SquareFreeResult::Status::NoneExists; break;
        default: res.status = SquareFreeResult::Status::BudgetExceeded; break;
    }
    return res;
}

Coloring grid_to_vertex_coloring(const GridColoring& g) {
    return Coloring{g.k, g.cells};
}

GridColoring vertex_to_grid_coloring(const Coloring& c, int n) {
    if (static_cast<int>(c.colors.size()) != n * n)
        throw std::invalid_argument("vertex_to_grid_coloring: " +
                                    std::to_string(c.colors.size()) +
                                    " vertices do not fill a " + std::to_string(n) + "x" +
                                    std::to_string(n) + " board");
    return GridColoring{n, c.k, c.colors};
}

} // namespace rooklab
