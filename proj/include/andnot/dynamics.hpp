#pragma once

#include "andnot/network.hpp"

#include <cstdint>
#include <vector>

namespace andnot {

/// Asynchronous state transition graph over all 2^n states. Stored as one
/// flip mask per state: bit v is set iff f_v(x) != x_v, i.e. the successor
/// x ^ (1 << v) exists. Every transition flips exactly one variable.
class StateTransitionGraph {
public:
    StateTransitionGraph(int variable_count, std::vector<std::uint32_t> unstable)
        : n_(variable_count), unstable_(std::move(unstable))
    {
    }

    int variable_count() const { return n_; }
    std::uint64_t state_count() const { return std::uint64_t{1} << n_; }
    std::uint32_t unstable_mask(State s) const { return unstable_[s]; }

private:
    int n_;
    std::vector<std::uint32_t> unstable_;
};

struct Attractor {
    std::vector<State> states; // sorted ascending
    bool fixed_point = false;  // singleton with no transitions

    friend bool operator==(const Attractor&, const Attractor&) = default;
};

struct AttractorSet {
    std::vector<Attractor> attractors; // sorted by minimum contained state

    std::size_t count() const { return attractors.size(); }
    std::size_t fixed_point_count() const
    {
        std::size_t k = 0;
        for (const Attractor& a : attractors)
            if (a.fixed_point)
                ++k;
        return k;
    }

    friend bool operator==(const AttractorSet&, const AttractorSet&) = default;
};

StateTransitionGraph build_astg(const BooleanNetwork& bn, std::uint64_t max_states);

/// Attractors as terminal strongly connected components.
AttractorSet attractors_scc(const StateTransitionGraph& stg);

/// Definitional oracle: forward-reachable closures that are minimal under
/// set inclusion. Independent of the SCC route; meant for small n.
AttractorSet attractors_trapset_oracle(const StateTransitionGraph& stg,
                                       std::uint64_t max_states = 32);

/// All states x with f_v(x) = x_v for every v; no transition graph built.
std::vector<State> fixed_points(const BooleanNetwork& bn, std::uint64_t max_states);

/// Terminal strongly connected components of an arbitrary digraph, each
/// sorted, ordered by minimum vertex.
std::vector<std::vector<int>> digraph_attractors(const std::vector<std::vector<int>>& adjacency);

/// Attractors of the network in which every variable of `assignment` is
/// pinned to its value (the remaining dynamics is explored only on the
/// agreeing subspace, which is closed).
AttractorSet attractors_restricted(const BooleanNetwork& bn,
                                   const std::vector<std::pair<int, bool>>& assignment,
                                   std::uint64_t max_states);

} // namespace andnot
