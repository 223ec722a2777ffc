#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rooklab {

using Arc = std::pair<int, int>;

struct TriangleWitness {
    int u, v, w; // arcs (u,v), (v,w), (w,u)
};

struct ClawWitness {
    int center;
    int leaves[3]; // pairwise non-adjacent neighbors of center
};

struct OppositePair {
    int u, v; // both (u,v) and (v,u) present
};

// Either a topological order (acyclic) or a directed cycle v0 -> v1 -> ... -> v0.
struct AcyclicityResult {
    bool acyclic = false;
    std::vector<int> topo_order; // valid permutation when acyclic
    std::vector<int> cycle;      // consecutive arcs exist, last -> first too
};

// Finite digraph: vertex ids 0..n-1, unique arcs, no self-loops.
// Immutable after construction; adjacency kept sorted both ways plus a
// bit-matrix (small n) or binary search (large n) for membership.
class Digraph {
public:
    Digraph() = default;

    /// Deduplicates arcs; rejects self-loops and out-of-range endpoints.
    static Digraph from_arcs(int n, std::span<const Arc> arcs);
    static Digraph from_arcs(int n, std::initializer_list<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    bool has_arc(int u, int v) const;
    bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

private:
    int n_ = 0;
    std::vector<Arc> arcs_; // sorted, unique
    std::vector<std::vector<int>> out_, in_;
    std::vector<std::uint64_t> matrix_; // n_*n_ bits when small enough, else empty
    bool use_matrix_ = false;
};

/// False plus a witness if some pair of opposite arcs exists.
std::optional<OppositePair> find_opposite_pair(const Digraph& d);
inline bool is_oriented(const Digraph& d) { return !find_opposite_pair(d); }

// Subdigraph induced by the vertex set `verts` (deduplicated, sorted).
// Vertex i of the result is verts[i]; the mapping is returned alongside.
struct InducedSubdigraph {
    Digraph graph;
    std::vector<int> original_ids; // result id -> id in the parent digraph
};
InducedSubdigraph induced_subdigraph(const Digraph& d, std::span<const int> verts);

/// Lexicographically first directed 3-cycle, if any.
std::optional<TriangleWitness> find_directed_triangle(const Digraph& d);

/// First induced K_{1,3} of the underlying graph, if any.
std::optional<ClawWitness> find_claw(const Digraph& d);

/// Kahn's algorithm; deterministic topological order (smallest vertex first)
/// or a directed cycle extracted from the cyclic core.
AcyclicityResult is_acyclic(const Digraph& d);

/// True iff the four distinct vertices induce exactly one directed 4-cycle
/// (either rotational orientation).
bool is_induced_directed_4cycle(const Digraph& d, const std::array<int, 4>& quad);

} // namespace rooklab
