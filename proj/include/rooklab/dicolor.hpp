#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rooklab/digraph.hpp"

namespace rooklab {

// Total assignment of colors 0..k-1 to vertices 0..n-1.
struct Coloring {
    int k = 0;
    std::vector<int> colors;
};

// A directed cycle lying inside one color class.
struct MonochromaticCycle {
    int color = 0;
    std::vector<int> cycle;
};

/// Empty result iff every color class induces an acyclic subdigraph.
/// Throws if the coloring does not cover the vertices of d.
std::optional<MonochromaticCycle> find_monochromatic_cycle(const Digraph& d,
                                                           const Coloring& c);
inline bool is_valid_dicoloring(const Digraph& d, const Coloring& c) {
    return !find_monochromatic_cycle(d, c);
}

enum class SearchOutcome {
    Found,          // witness coloring attached
    Exhausted,      // complete search proved none exists
    BudgetExceeded, // inconclusive: node budget ran out or cancel requested
};

struct SolveOptions {
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
    const std::atomic<bool>* cancel = nullptr; // observed between nodes
};

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::Exhausted;
    Coloring coloring; // valid iff outcome == Found
    std::uint64_t nodes = 0;
};

/// Backtracking search for an acyclic k-coloring. Deterministic: vertices in
/// decreasing total degree (ties by id), colors in index order, and a new
/// color index is opened only after all smaller ones.
SearchResult find_dicoloring(const Digraph& d, int k, const SolveOptions& opt = {});

struct DicolorResult {
    SearchOutcome outcome = SearchOutcome::Found; // BudgetExceeded = inconclusive
    int chi = 0;
    Coloring witness;
    std::string certificate; // how k = chi-1 was refuted
    std::uint64_t nodes = 0;
};

/// Least k admitting a valid coloring, counting up from k = 1.
/// A greedy coloring caps the iteration; the empty digraph has chi = 0.
DicolorResult dichromatic_number(const Digraph& d, const SolveOptions& opt = {});

/// First-fit coloring in search order; always valid, used as an upper bound.
Coloring greedy_dicoloring(const Digraph& d);

/// Exhaustive oracle over all k^n colorings. Requires at most 9 vertices.
int brute_force_dichromatic(const Digraph& d);

} // namespace rooklab
