#pragma once

#include "andnot/network.hpp"

#include <json.hpp>
#include <span>
#include <string>
#include <vector>

namespace andnot {

struct SignedArc {
    int from = -1;
    int to = -1;
    Sign sign = Sign::Positive;

    friend bool operator==(const SignedArc&, const SignedArc&) = default;
    friend auto operator<=>(const SignedArc&, const SignedArc&) = default;
};

/// A signed directed graph over named vertices 0..n-1. Self-arcs are
/// allowed; a (from, to, sign) triple appears at most once.
class SignedDigraph {
public:
    SignedDigraph() = default;
    SignedDigraph(std::vector<std::string> vertex_names, std::vector<SignedArc> arcs);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }

    /// All arcs, sorted by (from, to, sign); duplicates collapsed.
    const std::vector<SignedArc>& arcs() const { return arcs_; }

    std::span<const SignedArc> arcs_from(int u) const;
    bool has_arc(int u, int v, Sign sign) const;

    /// Number of input arcs of v (|I_v|), counting both signs.
    int in_arc_count(int v) const { return in_count_.at(v); }

    friend bool operator==(const SignedDigraph& a, const SignedDigraph& b)
    {
        return a.names_ == b.names_ && a.arcs_ == b.arcs_;
    }

private:
    std::vector<std::string> names_;
    std::vector<SignedArc> arcs_;
    std::vector<int> out_begin_; // CSR offsets into arcs_
    std::vector<int> in_count_;
};

/// Influence graph read directly off the literals: literal (u, +) of f_v
/// yields u -> v positive, (u, -) yields u -> v negative. Constants have
/// no incoming arcs. Exact for AND-NOT networks.
SignedDigraph structural_global_ig(const BooleanNetwork& bn);

/// Local influence graph at state x: u -> v positive iff raising u at x
/// raises f_v, negative iff it lowers f_v.
SignedDigraph local_ig(const BooleanNetwork& bn, State x);

/// Union of local_ig over all 2^n states. Test oracle; exponential.
SignedDigraph bruteforce_global_ig(const BooleanNetwork& bn, std::uint64_t max_states);

/// Subgraph induced by the given vertices (ids are remapped, names kept).
SignedDigraph induced_subgraph(const SignedDigraph& g, const std::vector<int>& vertices);

nlohmann::json graph_to_json(const SignedDigraph& g);

/// One arc per line: `u -> v +` / `u -> v -`.
std::string graph_to_edge_list(const SignedDigraph& g);

} // namespace andnot
