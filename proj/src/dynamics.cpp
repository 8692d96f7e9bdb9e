#include "andnot/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace andnot {

namespace {

constexpr std::uint32_t kNil = 0xffffffffu;

// Per-variable evaluation masks: a conjunction holds at x iff all positive
// inputs are set and no negative input is.
struct EvalTable {
    std::vector<FunctionKind> kind;
    std::vector<std::uint32_t> pos;
    std::vector<std::uint32_t> neg;

    explicit EvalTable(const BooleanNetwork& bn)
    {
        int n = bn.variable_count();
        kind.resize(static_cast<std::size_t>(n));
        pos.assign(static_cast<std::size_t>(n), 0);
        neg.assign(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            const UpdateFunction& fn = bn.function(v);
            kind[v] = fn.kind();
            for (const Literal& lit : fn.literals()) {
                if (lit.sign == Sign::Positive)
                    pos[v] |= State{1} << lit.var;
                else
                    neg[v] |= State{1} << lit.var;
            }
        }
    }

    bool value(int v, State x) const
    {
        switch (kind[v]) {
        case FunctionKind::ConstantZero:
            return false;
        case FunctionKind::ConstantOne:
            return true;
        case FunctionKind::Conjunction:
            return (x & pos[v]) == pos[v] && (x & neg[v]) == 0;
        }
        return false;
    }

    std::uint32_t flip_mask(int n, State x) const
    {
        std::uint32_t mask = 0;
        for (int v = 0; v < n; ++v)
            if (value(v, x) != state_bit(x, v))
                mask |= std::uint32_t{1} << v;
        return mask;
    }
};

void check_state_cap(int n, std::uint64_t max_states, const char* what)
{
    if (n >= 30 || (std::uint64_t{1} << n) > max_states)
        throw StateSpaceTooLargeError(std::string(what) + " needs 2^" + std::to_string(n) +
                                      " states (cap " + std::to_string(max_states) + ")");
}

// Iterative Tarjan keeping only terminal components. The Graph concept
// supplies count() and next(v, cursor, out): successors are consumed via a
// resumable cursor so the state transition graph never materializes its
// adjacency lists.
template <class Graph>
std::vector<std::vector<std::uint32_t>> terminal_sccs(const Graph& graph)
{
    const std::uint64_t count = graph.count();
    std::vector<std::uint32_t> index(count, kNil);
    std::vector<std::uint32_t> low(count, 0);
    std::vector<std::uint32_t> scc_id(count, kNil);
    std::vector<bool> on_stack(count, false);
    std::vector<std::uint32_t> comp_stack;

    struct Frame {
        std::uint32_t v;
        std::uint64_t cursor;
    };
    std::vector<Frame> call_stack;

    std::vector<std::vector<std::uint32_t>> terminal;
    std::uint32_t next_index = 0;
    std::uint32_t next_scc = 0;

    auto push_node = [&](std::uint32_t v) {
        index[v] = low[v] = next_index++;
        on_stack[v] = true;
        comp_stack.push_back(v);
        call_stack.push_back(Frame{v, 0});
    };

    for (std::uint64_t root = 0; root < count; ++root) {
        if (index[root] != kNil)
            continue;
        push_node(static_cast<std::uint32_t>(root));
        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            std::uint32_t v = frame.v;
            std::uint32_t w = 0;
            if (graph.next(v, frame.cursor, w)) {
                if (index[w] == kNil)
                    push_node(w); // frame reference is dead past this point
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
                continue;
            }

            call_stack.pop_back();
            if (!call_stack.empty())
                low[call_stack.back().v] = std::min(low[call_stack.back().v], low[v]);
            if (low[v] != index[v])
                continue;

            std::vector<std::uint32_t> members;
            while (true) {
                std::uint32_t m = comp_stack.back();
                comp_stack.pop_back();
                on_stack[m] = false;
                scc_id[m] = next_scc;
                members.push_back(m);
                if (m == v)
                    break;
            }

            bool is_terminal = true;
            for (std::uint32_t m : members) {
                std::uint64_t cursor = 0;
                std::uint32_t succ = 0;
                while (graph.next(m, cursor, succ)) {
                    if (scc_id[succ] != next_scc) {
                        is_terminal = false;
                        break;
                    }
                }
                if (!is_terminal)
                    break;
            }
            if (is_terminal) {
                std::sort(members.begin(), members.end());
                terminal.push_back(std::move(members));
            }
            ++next_scc;
        }
    }

    std::sort(terminal.begin(), terminal.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return terminal;
}

struct StgGraph {
    const StateTransitionGraph& stg;

    std::uint64_t count() const { return stg.state_count(); }

    bool next(std::uint32_t v, std::uint64_t& cursor, std::uint32_t& out) const
    {
        std::uint32_t remaining = static_cast<std::uint32_t>(
            cursor == 0 ? stg.unstable_mask(v) : cursor >> 32);
        if (remaining == 0)
            return false;
        int bit = std::countr_zero(remaining);
        remaining &= remaining - 1;
        cursor = (std::uint64_t{remaining} << 32) | 1u;
        out = v ^ (std::uint32_t{1} << bit);
        return true;
    }
};

struct AdjacencyGraph {
    const std::vector<std::vector<int>>& adj;

    std::uint64_t count() const { return adj.size(); }

    bool next(std::uint32_t v, std::uint64_t& cursor, std::uint32_t& out) const
    {
        if (cursor >= adj[v].size())
            return false;
        out = static_cast<std::uint32_t>(adj[v][cursor++]);
        return true;
    }
};

} // namespace

StateTransitionGraph build_astg(const BooleanNetwork& bn, std::uint64_t max_states)
{
    int n = bn.variable_count();
    check_state_cap(n, max_states, "state transition graph");
    EvalTable table(bn);
    std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::uint32_t> unstable(count);
    for (std::uint64_t s = 0; s < count; ++s)
        unstable[s] = table.flip_mask(n, static_cast<State>(s));
    return StateTransitionGraph(n, std::move(unstable));
}

AttractorSet attractors_scc(const StateTransitionGraph& stg)
{
    AttractorSet result;
    for (std::vector<std::uint32_t>& members : terminal_sccs(StgGraph{stg})) {
        Attractor attractor;
        attractor.states.assign(members.begin(), members.end());
        attractor.fixed_point =
            attractor.states.size() == 1 && stg.unstable_mask(attractor.states[0]) == 0;
        result.attractors.push_back(std::move(attractor));
    }
    return result;
}

AttractorSet attractors_trapset_oracle(const StateTransitionGraph& stg,
                                       std::uint64_t max_states)
{
    check_state_cap(stg.variable_count(), max_states, "trap-set oracle");
    const std::uint64_t count = stg.state_count();
    const std::size_t words = static_cast<std::size_t>((count + 63) / 64);

    // Forward-reachable closure of every state; a closure is an attractor
    // iff it is minimal, i.e. every member's closure is the whole set.
    std::vector<std::vector<std::uint64_t>> closure(count);
    std::vector<std::uint64_t> closure_size(count, 0);
    std::vector<std::uint32_t> queue;
    for (std::uint64_t s = 0; s < count; ++s) {
        std::vector<std::uint64_t> reach(words, 0);
        queue.assign(1, static_cast<std::uint32_t>(s));
        reach[s / 64] |= std::uint64_t{1} << (s % 64);
        std::uint64_t size = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::uint32_t x = queue[head];
            std::uint32_t mask = stg.unstable_mask(x);
            while (mask != 0) {
                int bit = std::countr_zero(mask);
                mask &= mask - 1;
                std::uint32_t y = x ^ (std::uint32_t{1} << bit);
                std::uint64_t& word = reach[y / 64];
                std::uint64_t flag = std::uint64_t{1} << (y % 64);
                if ((word & flag) == 0) {
                    word |= flag;
                    ++size;
                    queue.push_back(y);
                }
            }
        }
        closure[s] = std::move(reach);
        closure_size[s] = size;
    }

    AttractorSet result;
    for (std::uint64_t s = 0; s < count; ++s) {
        bool minimal = true;
        std::vector<State> states;
        for (std::uint64_t t = 0; t < count && minimal; ++t) {
            if ((closure[s][t / 64] >> (t % 64)) & 1) {
                if (closure_size[t] != closure_size[s])
                    minimal = false;
                else
                    states.push_back(static_cast<State>(t));
            }
        }
        // Report each attractor once, at its smallest member.
        if (!minimal || states.front() != s)
            continue;
        Attractor attractor;
        attractor.fixed_point = states.size() == 1 && stg.unstable_mask(states[0]) == 0;
        attractor.states = std::move(states);
        result.attractors.push_back(std::move(attractor));
    }
    return result;
}

std::vector<State> fixed_points(const BooleanNetwork& bn, std::uint64_t max_states)
{
    int n = bn.variable_count();
    check_state_cap(n, max_states, "fixed-point enumeration");
    EvalTable table(bn);
    std::vector<State> result;
    std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < count; ++s)
        if (table.flip_mask(n, static_cast<State>(s)) == 0)
            result.push_back(static_cast<State>(s));
    return result;
}

std::vector<std::vector<int>> digraph_attractors(const std::vector<std::vector<int>>& adjacency)
{
    std::vector<std::vector<int>> result;
    for (const std::vector<std::uint32_t>& members : terminal_sccs(AdjacencyGraph{adjacency}))
        result.emplace_back(members.begin(), members.end());
    return result;
}

AttractorSet attractors_restricted(const BooleanNetwork& bn,
                                   const std::vector<std::pair<int, bool>>& assignment,
                                   std::uint64_t max_states)
{
    int n = bn.variable_count();
    std::vector<int> pinned_vars;
    pinned_vars.reserve(assignment.size());
    for (auto [v, value] : assignment)
        pinned_vars.push_back(v);

    BooleanNetwork pinned = pin_assignment(make_source(bn, pinned_vars), assignment);
    EvalTable table(pinned);

    std::vector<bool> is_pinned(static_cast<std::size_t>(n), false);
    State base = 0;
    for (auto [v, value] : assignment) {
        is_pinned[v] = true;
        base = state_with_bit(base, v, value);
    }
    std::vector<int> free_vars;
    for (int v = 0; v < n; ++v)
        if (!is_pinned[v])
            free_vars.push_back(v);

    int free_count = static_cast<int>(free_vars.size());
    check_state_cap(free_count, max_states, "restricted state space");
    std::uint64_t sub_count = std::uint64_t{1} << free_count;

    auto expand = [&](std::uint32_t sub) {
        State s = base;
        for (int i = 0; i < free_count; ++i)
            if ((sub >> i) & 1)
                s = state_with_bit(s, free_vars[i], true);
        return s;
    };

    // Flip masks compressed onto the free variables; pinned variables are
    // stable everywhere on the agreeing subspace.
    std::vector<std::uint32_t> sub_unstable(sub_count);
    for (std::uint64_t sub = 0; sub < sub_count; ++sub) {
        State s = expand(static_cast<std::uint32_t>(sub));
        std::uint32_t mask = 0;
        for (int i = 0; i < free_count; ++i)
            if (table.value(free_vars[i], s) != state_bit(s, free_vars[i]))
                mask |= std::uint32_t{1} << i;
        sub_unstable[sub] = mask;
    }

    StateTransitionGraph sub_stg(free_count, std::move(sub_unstable));
    AttractorSet sub_result = attractors_scc(sub_stg);

    AttractorSet result;
    for (const Attractor& a : sub_result.attractors) {
        Attractor mapped;
        mapped.fixed_point = a.fixed_point;
        for (State sub : a.states)
            mapped.states.push_back(expand(sub));
        std::sort(mapped.states.begin(), mapped.states.end());
        result.attractors.push_back(std::move(mapped));
    }
    std::sort(result.attractors.begin(), result.attractors.end(),
              [](const Attractor& a, const Attractor& b) { return a.states.front() < b.states.front(); });
    return result;
}

} // namespace andnot
