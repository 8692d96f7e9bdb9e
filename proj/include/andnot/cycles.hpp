#pragma once

#include "andnot/influence.hpp"
#include "andnot/network.hpp"

#include <cstddef>
#include <vector>

namespace andnot {

/// A simple directed cycle, stored as its arc list in canonical rotation:
/// arcs[0].from is the minimum-index vertex on the cycle. A single
/// self-arc is a cycle of length 1.
struct SignedCycle {
    std::vector<SignedArc> arcs;

    int length() const { return static_cast<int>(arcs.size()); }

    /// Vertices in traversal order, starting at the canonical vertex.
    std::vector<int> vertex_sequence() const;

    /// Distinct vertices, sorted ascending.
    std::vector<int> vertex_set() const;

    bool contains_vertex(int v) const;
    bool contains_arc(const SignedArc& arc) const;

    int negative_arc_count() const;
    bool even() const { return negative_arc_count() % 2 == 0; }

    friend bool operator==(const SignedCycle&, const SignedCycle&) = default;
};

struct CycleEnumeration {
    std::vector<SignedCycle> cycles; // sorted by vertex sequence, then signs
    bool truncated = false;          // max_cycles budget hit; list is partial
};

/// All simple cycles of g, including self-loops. Parallel arcs of opposite
/// sign over one vertex sequence yield distinct cycles. Deterministic
/// order; stops with truncated=true once max_cycles cycles were emitted.
CycleEnumeration enumerate_cycles(const SignedDigraph& g, std::size_t max_cycles = 1'000'000);

/// Vertex u with a positive arc into one cycle vertex and a negative arc
/// into a different one, neither arc belonging to the cycle.
struct DelocalizingTriple {
    int pivot = -1;
    int pos_target = -1;
    int neg_target = -1;
    bool internal = false; // pivot lies on the cycle

    friend bool operator==(const DelocalizingTriple&, const DelocalizingTriple&) = default;
};

/// All delocalizing triples of c in g; empty iff c is strong.
std::vector<DelocalizingTriple> delocalizing_triples(const SignedDigraph& g, const SignedCycle& c);

/// Pivot k with an all-positive path to cycle vertex pos_target and a path
/// of single-input all-positive mediators ending in one negative arc into a
/// different cycle vertex neg_target.
struct InconsistencyWitness {
    int pivot = -1;
    std::vector<SignedArc> positive_path; // k -> ... -> pos_target, all positive
    std::vector<SignedArc> negative_path; // k -> mediators -> neg_target, last arc negative
    int pos_target = -1;
    int neg_target = -1;
};

struct WitnessSearchResult {
    std::vector<InconsistencyWitness> witnesses; // at most one per pivot, pivots ascending
    bool budget_hit = false;                     // max_path_len cut the search short
};

/// Witnesses that make c inconsistent; empty iff c is consistent.
/// max_path_len bounds the arc count of each path; 0 means |V(g)|, which
/// covers every simple path.
WitnessSearchResult inconsistency_witnesses(const SignedDigraph& g, const SignedCycle& c,
                                            std::size_t max_path_len = 0);

struct CycleRecord {
    SignedCycle cycle;
    bool even = false;
    bool strong = false;     // no delocalizing triples
    bool consistent = false; // no inconsistency witnesses
    std::vector<DelocalizingTriple> triples;
    std::vector<InconsistencyWitness> witnesses;
    std::vector<int> pivots; // distinct witness pivots, ascending
};

struct CycleClassification {
    std::vector<CycleRecord> records;
    bool truncated = false;
    bool path_budget_hit = false;
};

CycleClassification classify_cycles(const SignedDigraph& g, std::size_t max_cycles = 1'000'000,
                                    std::size_t max_path_len = 0);

struct LocalCycleCheck {
    bool local = false;
    State witness = 0; // a state whose local influence graph carries the cycle
};

/// True iff some state's local influence graph contains every arc of c.
LocalCycleCheck is_local_cycle(const BooleanNetwork& bn, const SignedCycle& c,
                               std::uint64_t max_states);

} // namespace andnot
