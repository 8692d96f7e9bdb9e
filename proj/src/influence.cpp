#include "andnot/influence.hpp"

#include <algorithm>
#include <sstream>

namespace andnot {

SignedDigraph::SignedDigraph(std::vector<std::string> vertex_names, std::vector<SignedArc> arcs)
    : names_(std::move(vertex_names)), arcs_(std::move(arcs))
{
    int n = vertex_count();
    for (const SignedArc& arc : arcs_)
        if (arc.from < 0 || arc.from >= n || arc.to < 0 || arc.to >= n)
            throw std::invalid_argument("arc endpoint outside vertex range");

    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

    out_begin_.assign(static_cast<std::size_t>(n) + 1, 0);
    in_count_.assign(static_cast<std::size_t>(n), 0);
    for (const SignedArc& arc : arcs_) {
        ++out_begin_[static_cast<std::size_t>(arc.from) + 1];
        ++in_count_[static_cast<std::size_t>(arc.to)];
    }
    for (std::size_t i = 1; i < out_begin_.size(); ++i)
        out_begin_[i] += out_begin_[i - 1];
}

std::span<const SignedArc> SignedDigraph::arcs_from(int u) const
{
    std::size_t begin = static_cast<std::size_t>(out_begin_.at(u));
    std::size_t end = static_cast<std::size_t>(out_begin_.at(static_cast<std::size_t>(u) + 1));
    return {arcs_.data() + begin, end - begin};
}

bool SignedDigraph::has_arc(int u, int v, Sign sign) const
{
    return std::binary_search(arcs_.begin(), arcs_.end(), SignedArc{u, v, sign});
}

SignedDigraph structural_global_ig(const BooleanNetwork& bn)
{
    std::vector<SignedArc> arcs;
    for (int v = 0; v < bn.variable_count(); ++v)
        for (const Literal& lit : bn.function(v).literals())
            arcs.push_back(SignedArc{lit.var, v, lit.sign});
    return SignedDigraph(bn.names(), std::move(arcs));
}

SignedDigraph local_ig(const BooleanNetwork& bn, State x)
{
    int n = bn.variable_count();
    std::vector<SignedArc> arcs;
    for (int target = 0; target < n; ++target) {
        const UpdateFunction& fn = bn.function(target);
        if (fn.is_constant())
            continue;
        for (int source = 0; source < n; ++source) {
            bool low = evaluate(fn, state_with_bit(x, source, false));
            bool high = evaluate(fn, state_with_bit(x, source, true));
            if (low == high)
                continue;
            arcs.push_back(SignedArc{source, target, high ? Sign::Positive : Sign::Negative});
        }
    }
    return SignedDigraph(bn.names(), std::move(arcs));
}

SignedDigraph bruteforce_global_ig(const BooleanNetwork& bn, std::uint64_t max_states)
{
    int n = bn.variable_count();
    std::uint64_t count = std::uint64_t{1} << n;
    if (n >= 30 || count > max_states)
        throw StateSpaceTooLargeError("brute-force influence graph needs 2^" +
                                      std::to_string(n) + " states");
    std::vector<SignedArc> arcs;
    for (State x = 0; x < count; ++x) {
        const SignedDigraph local = local_ig(bn, x);
        arcs.insert(arcs.end(), local.arcs().begin(), local.arcs().end());
    }
    return SignedDigraph(bn.names(), std::move(arcs));
}

SignedDigraph induced_subgraph(const SignedDigraph& g, const std::vector<int>& vertices)
{
    std::vector<int> keep = vertices;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    std::vector<int> remap(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<std::string> names;
    names.reserve(keep.size());
    for (int v : keep) {
        remap.at(v) = static_cast<int>(names.size());
        names.push_back(g.name(v));
    }

    std::vector<SignedArc> arcs;
    for (const SignedArc& arc : g.arcs())
        if (remap[arc.from] >= 0 && remap[arc.to] >= 0)
            arcs.push_back(SignedArc{remap[arc.from], remap[arc.to], arc.sign});
    return SignedDigraph(std::move(names), std::move(arcs));
}

nlohmann::json graph_to_json(const SignedDigraph& g)
{
    nlohmann::json arcs = nlohmann::json::array();
    for (const SignedArc& arc : g.arcs())
        arcs.push_back({{"from", g.name(arc.from)},
                        {"to", g.name(arc.to)},
                        {"sign", std::string(1, sign_char(arc.sign))}});
    return {{"vertices", g.names()}, {"arcs", arcs}};
}

std::string graph_to_edge_list(const SignedDigraph& g)
{
    std::ostringstream out;
    for (const SignedArc& arc : g.arcs())
        out << g.name(arc.from) << " -> " << g.name(arc.to) << ' ' << sign_char(arc.sign) << '\n';
    return out.str();
}

} // namespace andnot
