#include "rooklab/digraph.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <stdexcept>
#include <string>

namespace rooklab {

namespace {
// Above this the bit-matrix would cost more than ~8 MB; fall back to binary search.
constexpr int kMatrixLimit = 8192;
} // namespace

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
    if (n < 0) throw std::invalid_argument("from_arcs: negative vertex count");
    Digraph d;
    d.n_ = n;
    d.arcs_.assign(arcs.begin(), arcs.end());
    std::sort(d.arcs_.begin(), d.arcs_.end());
    d.arcs_.erase(std::unique(d.arcs_.begin(), d.arcs_.end()), d.arcs_.end());
    for (const auto& [u, v] : d.arcs_) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("from_arcs: endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("from_arcs: self-loop at vertex " +
                                        std::to_string(u));
    }
    d.out_.assign(n, {});
    d.in_.assign(n, {});
    for (const auto& [u, v] : d.arcs_) {
        d.out_[u].push_back(v);
        d.in_[v].push_back(u);
    }
    for (auto& lst : d.in_) std::sort(lst.begin(), lst.end());
    // out_ lists are already sorted: arcs_ is sorted lexicographically
    d.use_matrix_ = n <= kMatrixLimit;
    if (d.use_matrix_ && n > 0) {
        const std::size_t bits = static_cast<std::size_t>(n) * n;
        d.matrix_.assign((bits + 63) / 64, 0);
        for (const auto& [u, v] : d.arcs_) {
            const std::size_t idx = static_cast<std::size_t>(u) * n + v;
            d.matrix_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
        }
    }
    return d;
}

Digraph Digraph::from_arcs(int n, std::initializer_list<Arc> arcs) {
    return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

bool Digraph::has_arc(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    if (use_matrix_) {
        const std::size_t idx = static_cast<std::size_t>(u) * n_ + v;
        return (matrix_[idx >> 6] >> (idx & 63)) & 1u;
    }
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::optional<OppositePair> find_opposite_pair(const Digraph& d) {
    for (const auto& [u, v] : d.arcs())
        if (u < v && d.has_arc(v, u)) return OppositePair{u, v};
    return std::nullopt;
}

InducedSubdigraph induced_subdigraph(const Digraph& d, std::span<const int> verts) {
    std::vector<int> ids(verts.begin(), verts.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int v : ids)
        if (v < 0 || v >= d.vertex_count())
            throw std::invalid_argument("induced_subdigraph: vertex " +
                                        std::to_string(v) + " out of range");
    std::vector<int> newid(d.vertex_count(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) newid[ids[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    for (int u : ids)
        for (int v : d.out_neighbors(u))
            if (newid[v] >= 0) arcs.emplace_back(newid[u], newid[v]);
    InducedSubdigraph result;
    result.graph = Digraph::from_arcs(static_cast<int>(ids.size()), arcs);
    result.original_ids = std::move(ids);
    return result;
}

std::optional<TriangleWitness> find_directed_triangle(const Digraph& d) {
    // Lexicographically first (u,v,w): arcs are sorted, w minimal in
    // out(v) /\ in(u) via a sorted merge.
    for (const auto& [u, v] : d.arcs()) {
        const auto& fwd = d.out_neighbors(v);
        const auto& bwd = d.in_neighbors(u);
        std::size_t i = 0, j = 0;
        while (i < fwd.size() && j < bwd.size()) {
            if (fwd[i] < bwd[j]) ++i;
            else if (fwd[i] > bwd[j]) ++j;
            else return TriangleWitness{u, v, fwd[i]};
        }
    }
    return std::nullopt;
}

std::optional<ClawWitness> find_claw(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> nbrs;
    for (int center = 0; center < n; ++center) {
        nbrs.clear();
        // underlying-graph neighborhood, sorted without duplicates
        const auto& out = d.out_neighbors(center);
        const auto& in = d.in_neighbors(center);
        std::set_union(out.begin(), out.end(), in.begin(), in.end(),
                       std::back_inserter(nbrs));
        const int m = static_cast<int>(nbrs.size());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                if (d.adjacent(nbrs[i], nbrs[j])) continue;
                for (int l = j + 1; l < m; ++l) {
                    if (d.adjacent(nbrs[i], nbrs[l]) || d.adjacent(nbrs[j], nbrs[l]))
                        continue;
                    return ClawWitness{center, {nbrs[i], nbrs[j], nbrs[l]}};
                }
            }
    }
    return std::nullopt;
}

AcyclicityResult is_acyclic(const Digraph& d) {
    const int n = d.vertex_count();
    AcyclicityResult res;
    std::vector<int> indeg(n, 0);
    for (const auto& [u, v] : d.arcs()) ++indeg[v];

    // Kahn with an ordered frontier: smallest vertex first.
    std::vector<char> removed(n, 0);
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) frontier.push_back(v);
    std::make_heap(frontier.begin(), frontier.end(), std::greater<int>{});
    while (!frontier.empty()) {
        std::pop_heap(frontier.begin(), frontier.end(), std::greater<int>{});
        const int v = frontier.back();
        frontier.pop_back();
        removed[v] = 1;
        res.topo_order.push_back(v);
        for (int w : d.out_neighbors(v))
            if (--indeg[w] == 0) {
                frontier.push_back(w);
                std::push_heap(frontier.begin(), frontier.end(), std::greater<int>{});
            }
    }
    if (static_cast<int>(res.topo_order.size()) == n) {
        res.acyclic = true;
        return res;
    }

    // A cycle exists; extract one by DFS (smallest start, neighbors ascending).
    res.topo_order.clear();
    std::vector<int> state(n, 0); // 0 white, 1 on stack, 2 done
    std::vector<int> stack_vertex, stack_next;
    for (int start = 0; start < n && res.cycle.empty(); ++start) {
        if (state[start] != 0 || removed[start]) continue;
        stack_vertex.assign(1, start);
        stack_next.assign(1, 0);
        state[start] = 1;
        while (!stack_vertex.empty() && res.cycle.empty()) {
            const int u = stack_vertex.back();
            const auto& nbrs = d.out_neighbors(u);
            if (stack_next.back() == static_cast<int>(nbrs.size())) {
                state[u] = 2;
                stack_vertex.pop_back();
                stack_next.pop_back();
                continue;
            }
            const int w = nbrs[stack_next.back()++];
            if (removed[w]) continue; // acyclic fringe, cannot be on a cycle
            if (state[w] == 1) {
                auto it = std::find(stack_vertex.begin(), stack_vertex.end(), w);
                res.cycle.assign(it, stack_vertex.end());
            } else if (state[w] == 0) {
                state[w] = 1;
                stack_vertex.push_back(w);
                stack_next.push_back(0);
            }
        }
    }
    res.acyclic = false;
    return res;
}

bool is_induced_directed_4cycle(const Digraph& d, const std::array<int, 4>& quad) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (quad[i] == quad[j])
                throw std::invalid_argument("is_induced_directed_4cycle: duplicate vertex " +
                                            std::to_string(quad[i]));
    int arc_count = 0;
    int succ[4] = {-1, -1, -1, -1};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            if (d.has_arc(quad[i], quad[j])) {
                ++arc_count;
                if (succ[i] != -1) return false; // out-degree > 1 inside the quad
                succ[i] = j;
            }
        }
    if (arc_count != 4) return false;
    // one 4-cycle, not two opposite 2-cycles
    int at = 0;
    for (int step = 0; step < 4; ++step) {
        if (succ[at] == -1) return false;
        at = succ[at];
        if (at == 0) return step == 3;
    }
    return false;
}

} // namespace rooklab
