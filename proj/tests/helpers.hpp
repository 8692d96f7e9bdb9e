#pragma once

#include "andnot/influence.hpp"
#include "andnot/network.hpp"

#include <string>
#include <vector>

namespace andnot::testing {

// Three-node example with a unique cyclic attractor: the only even cycle
// is delocalized by c.
inline BooleanNetwork three_node_example()
{
    return parse_network("a, !b & c\n"
                         "b, !a & !c\n"
                         "c, !a\n");
}

// Four-node example where the dominating set {d} beats the strong-even
// hitting set {a, d}.
inline BooleanNetwork four_node_example()
{
    return parse_network("a, b & d\n"
                         "b, a & !c\n"
                         "c, d\n"
                         "d, !c & d\n");
}

inline SignedArc named_arc(const SignedDigraph& g, const std::string& from,
                           const std::string& to, Sign sign)
{
    int u = -1;
    int v = -1;
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (g.name(i) == from)
            u = i;
        if (g.name(i) == to)
            v = i;
    }
    return SignedArc{u, v, sign};
}

inline std::vector<std::string> vertex_names(const SignedDigraph& g, const std::vector<int>& ids)
{
    std::vector<std::string> names;
    names.reserve(ids.size());
    for (int v : ids)
        names.push_back(g.name(v));
    return names;
}

} // namespace andnot::testing
