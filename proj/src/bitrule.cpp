#include "rooklab/bitrule.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace rooklab {

int bit(std::uint64_t n, int i) {
    if (i < 0) throw std::invalid_argument("bit: negative index");
    if (i >= 64) return 0;
    return static_cast<int>((n >> i) & 1u);
}

int lsb_diff(std::uint64_t x, std::uint64_t y) {
    if (x == y)
        throw std::invalid_argument("lsb_diff: undefined for equal inputs");
    return std::countr_zero(x ^ y);
}

int two_adic_valuation(std::uint64_t m) {
    if (m == 0)
        throw std::invalid_argument("two_adic_valuation: undefined for 0");
    return std::countr_zero(m);
}

Direction orient_row(std::uint64_t a, std::uint64_t b, std::uint64_t d) {
    const int i = lsb_diff(b, d);
    return bit(b, i) == bit(a, i) ? Direction::Forward : Direction::Backward;
}

Direction orient_col(std::uint64_t b, std::uint64_t a, std::uint64_t c) {
    const int i = lsb_diff(a, c);
    return bit(b, i) != bit(a, i) ? Direction::Forward : Direction::Backward;
}

bool generalized_square_predicate(std::uint64_t a, std::uint64_t c,
                                  std::uint64_t b, std::uint64_t d) {
    return lsb_diff(a, c) == lsb_diff(b, d);
}

RookDigraph build_rook_digraph(int n) {
    if (n < 1)
        throw std::invalid_argument("build_rook_digraph: N must be >= 1, got " +
                                    std::to_string(n));
    RookDigraph rd;
    rd.n = n;
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * n * (n - 1));
    auto id = [n](int a, int b) { return (a - 1) * n + (b - 1); };
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int d = b + 1; d <= n; ++d) {
                if (orient_row(a, b, d) == Direction::Forward)
                    arcs.emplace_back(id(a, b), id(a, d));
                else
                    arcs.emplace_back(id(a, d), id(a, b));
            }
    for (int b = 1; b <= n; ++b)
        for (int a = 1; a <= n; ++a)
            for (int c = a + 1; c <= n; ++c) {
                if (orient_col(b, a, c) == Direction::Forward)
                    arcs.emplace_back(id(a, b), id(c, b));
                else
                    arcs.emplace_back(id(c, b), id(a, b));
            }
    rd.graph = Digraph::from_arcs(n * n, arcs);
    return rd;
}

} // namespace rooklab
