#include "rooklab/dicolor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rooklab {

std::optional<MonochromaticCycle> find_monochromatic_cycle(const Digraph& d,
                                                           const Coloring& c) {
    const int n = d.vertex_count();
    if (static_cast<int>(c.colors.size()) != n)
        throw std::invalid_argument("find_monochromatic_cycle: coloring covers " +
                                    std::to_string(c.colors.size()) + " vertices, digraph has " +
                                    std::to_string(n));
    for (int v = 0; v < n; ++v)
        if (c.colors[v] < 0 || c.colors[v] >= c.k)
            throw std::invalid_argument("find_monochromatic_cycle: color of vertex " +
                                        std::to_string(v) + " out of range");
    for (int color = 0; color < c.k; ++color) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (c.colors[v] == color) members.push_back(v);
        if (members.empty()) continue;
        auto sub = induced_subdigraph(d, members);
        auto acy = is_acyclic(sub.graph);
        if (!acy.acyclic) {
            MonochromaticCycle mc;
            mc.color = color;
            for (int v : acy.cycle) mc.cycle.push_back(sub.original_ids[v]);
            return mc;
        }
    }
    return std::nullopt;
}

namespace {

// Shared state for the chronological DFS over one (digraph, k) instance.
struct DicolorSearch {
    const Digraph& d;
    int k;
    const SolveOptions& opt;
    std::vector<int> order;     // position -> vertex
    std::vector<int> color;     // vertex -> assigned color or -1
    std::uint64_t nodes = 0;
    bool aborted = false;

    // scratch for the incremental cycle check
    std::vector<std::uint32_t> mark_in, mark_seen;
    std::uint32_t stamp = 0;
    std::vector<int> bfs_stack;

    DicolorSearch(const Digraph& d_, int k_, const SolveOptions& opt_)
        : d(d_), k(k_), opt(opt_), color(d_.vertex_count(), -1),
          mark_in(d_.vertex_count(), 0), mark_seen(d_.vertex_count(), 0) {
        const int n = d.vertex_count();
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> degree(n, 0);
        for (const auto& [u, v] : d.arcs()) { ++degree[u]; ++degree[v]; }
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return degree[a] > degree[b]; });
    }

    // Would assigning v to class c close a directed cycle within the class?
    // The class was acyclic, so any new cycle passes through v: look for a
    // path from an out-neighbor of v to an in-neighbor of v inside the class.
    bool creates_cycle(int v, int c) {
        ++stamp;
        bool have_in = false;
        for (int u : d.in_neighbors(v))
            if (color[u] == c) { mark_in[u] = stamp; have_in = true; }
        if (!have_in) return false;
        bfs_stack.clear();
        for (int w : d.out_neighbors(v))
            if (color[w] == c && mark_seen[w] != stamp) {
                mark_seen[w] = stamp;
                bfs_stack.push_back(w);
            }
        while (!bfs_stack.empty()) {
            const int x = bfs_stack.back();
            bfs_stack.pop_back();
            if (mark_in[x] == stamp) return true;
            for (int y : d.out_neighbors(x))
                if (color[y] == c && mark_seen[y] != stamp) {
                    mark_seen[y] = stamp;
                    bfs_stack.push_back(y);
                }
        }
        return false;
    }

    bool out_of_budget() {
        if (nodes >= opt.node_budget) return true;
        if (opt.cancel && ((nodes & 1023) == 0) && opt.cancel->load(std::memory_order_relaxed))
            return true;
        return false;
    }

    bool dfs(int depth, int max_used) {
        if (depth == static_cast<int>(order.size())) return true;
        const int v = order[depth];
        const int cmax = std::min(k - 1, max_used + 1); // symmetry breaking
        for (int c = 0; c <= cmax; ++c) {
            if (out_of_budget()) { aborted = true; return false; }
            ++nodes;
            if (creates_cycle(v, c)) continue;
            color[v] = c;
            if (dfs(depth + 1, std::max(max_used, c))) return true;
            color[v] = -1;
            if (aborted) return false;
        }
        return false;
    }
};

} // namespace

SearchResult find_dicoloring(const Digraph& d, int k, const SolveOptions& opt) {
    const int n = d.vertex_count();
    if (k < 0 || (k == 0 && n > 0))
        throw std::invalid_argument("find_dicoloring: k must be >= 1 for a nonempty digraph");
    SearchResult res;
    if (n == 0) {
        res.outcome = SearchOutcome::Found;
        res.coloring = Coloring{k, {}};
        return res;
    }
    DicolorSearch search(d, k, opt);
    const bool found = search.dfs(0, -1);
    res.nodes = search.nodes;
    if (found) {
        res.outcome = SearchOutcome::Found;
        res.coloring = Coloring{k, search.color};
    } else if (search.aborted) {
        res.outcome = SearchOutcome::BudgetExceeded;
    } else {
        res.outcome = SearchOutcome::Exhausted;
    }
    return res;
}

Coloring greedy_dicoloring(const Digraph& d) {
    const int n = d.vertex_count();
    if (n == 0) return Coloring{0, {}};
    SolveOptions opt;
    DicolorSearch scratch(d, n, opt); // reuse order + cycle check
    int k = 0;
    for (int v : scratch.order) {
        int c = 0;
        while (scratch.creates_cycle(v, c)) ++c;
        scratch.color[v] = c;
        k = std::max(k, c + 1);
    }
    return Coloring{k, scratch.color};
}

DicolorResult dichromatic_number(const Digraph& d, const SolveOptions& opt) {
    DicolorResult res;
    if (d.vertex_count() == 0) {
        res.outcome = SearchOutcome::Found;
        res.chi = 0;
        res.witness = Coloring{0, {}};
        res.certificate = "empty digraph";
        return res;
    }
    const int ceiling = greedy_dicoloring(d).k;
    for (int k = 1; k <= ceiling; ++k) {
        SolveOptions step = opt;
        if (opt.node_budget != std::numeric_limits<std::uint64_t>::max()) {
            if (res.nodes >= opt.node_budget) {
                res.outcome = SearchOutcome::BudgetExceeded;
                return res;
            }
            step.node_budget = opt.node_budget - res.nodes;
        }
        SearchResult sr = find_dicoloring(d, k, step);
        res.nodes += sr.nodes;
        if (sr.outcome == SearchOutcome::BudgetExceeded) {
            res.outcome = SearchOutcome::BudgetExceeded;
            res.certificate = "budget exhausted at k = " + std::to_string(k);
            return res;
        }
        if (sr.outcome == SearchOutcome::Found) {
            res.outcome = SearchOutcome::Found;
            res.chi = k;
            res.witness = std::move(sr.coloring);
            if (k > 1)
                res.certificate = "exhaustive search refuted k = " + std::to_string(k - 1);
            else
                res.certificate = "k = 1 is the minimum for nonempty digraphs";
            return res;
        }
    }
    // unreachable: the greedy ceiling always admits a coloring
    throw std::logic_error("dichromatic_number: search exceeded greedy ceiling");
}

namespace {

// Independent per-class cycle test for the brute-force oracle: plain
// recursive DFS, no shared machinery with the search path.
bool class_has_cycle(const Digraph& d, const std::vector<int>& colors, int c) {
    const int n = d.vertex_count();
    std::vector<int> state(n, 0);
    std::vector<int> stack, next;
    for (int s = 0; s < n; ++s) {
        if (colors[s] != c || state[s] != 0) continue;
        stack.assign(1, s);
        next.assign(1, 0);
        state[s] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            const auto& nbrs = d.out_neighbors(u);
            bool descended = false;
            while (next.back() < static_cast<int>(nbrs.size())) {
                const int w = nbrs[next.back()++];
                if (colors[w] != c) continue;
                if (state[w] == 1) return true;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back(w);
                    next.push_back(0);
                    descended = true;
                    break;
                }
            }
            if (!descended && !stack.empty() && stack.back() == u) {
                state[u] = 2;
                stack.pop_back();
                next.pop_back();
            }
        }
    }
    return false;
}

} // namespace

int brute_force_dichromatic(const Digraph& d) {
    const int n = d.vertex_count();
    if (n > 9)
        throw std::invalid_argument("brute_force_dichromatic: limited to 9 vertices, got " +
                                    std::to_string(n));
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> colors(n, 0);
        while (true) {
            bool ok = true;
            for (int c = 0; c < k && ok; ++c)
                if (class_has_cycle(d, colors, c)) ok = false;
            if (ok) return k;
            int i = 0;
            while (i < n && ++colors[i] == k) colors[i++] = 0;
            if (i == n) break;
        }
    }
    return n; // every digraph is n-colorable (singleton classes)
}

} // namespace rooklab
