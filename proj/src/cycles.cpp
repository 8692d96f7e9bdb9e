#include "andnot/cycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace andnot {

std::vector<int> SignedCycle::vertex_sequence() const
{
    std::vector<int> seq;
    seq.reserve(arcs.size());
    for (const SignedArc& arc : arcs)
        seq.push_back(arc.from);
    return seq;
}

std::vector<int> SignedCycle::vertex_set() const
{
    std::vector<int> set = vertex_sequence();
    std::sort(set.begin(), set.end());
    return set;
}

bool SignedCycle::contains_vertex(int v) const
{
    for (const SignedArc& arc : arcs)
        if (arc.from == v)
            return true;
    return false;
}

bool SignedCycle::contains_arc(const SignedArc& arc) const
{
    return std::find(arcs.begin(), arcs.end(), arc) != arcs.end();
}

int SignedCycle::negative_arc_count() const
{
    int count = 0;
    for (const SignedArc& arc : arcs)
        if (arc.sign == Sign::Negative)
            ++count;
    return count;
}

namespace {

// Johnson-style rooted search: for each root r (ascending) enumerate the
// cycles whose minimum vertex is r, restricted to the subgraph on {v >= r}.
// Sign multiplicities are expanded afterwards, so the search itself runs on
// the underlying unsigned structure.
class CycleSearch {
public:
    CycleSearch(const SignedDigraph& g, std::size_t max_cycles)
        : graph_(g), max_cycles_(max_cycles), n_(g.vertex_count())
    {
        succ_.resize(static_cast<std::size_t>(n_));
        for (int u = 0; u < n_; ++u) {
            for (const SignedArc& arc : g.arcs_from(u))
                succ_[u].push_back(arc.to);
            succ_[u].erase(std::unique(succ_[u].begin(), succ_[u].end()), succ_[u].end());
        }
        blocked_.assign(static_cast<std::size_t>(n_), false);
        unblock_list_.resize(static_cast<std::size_t>(n_));
    }

    CycleEnumeration run()
    {
        for (root_ = 0; root_ < n_ && !stop_; ++root_) {
            if (std::binary_search(succ_[root_].begin(), succ_[root_].end(), root_))
                emit_path({root_}, true);
            if (stop_)
                break;
            std::fill(blocked_.begin(), blocked_.end(), false);
            for (auto& list : unblock_list_)
                list.clear();
            stack_.clear();
            circuit(root_);
        }
        std::sort(result_.cycles.begin(), result_.cycles.end(), cycle_less);
        return std::move(result_);
    }

private:
    static bool cycle_less(const SignedCycle& a, const SignedCycle& b)
    {
        auto seq_a = a.vertex_sequence();
        auto seq_b = b.vertex_sequence();
        if (seq_a != seq_b)
            return seq_a < seq_b;
        auto sign_of = [](const SignedCycle& c) {
            std::vector<Sign> s;
            for (const SignedArc& arc : c.arcs)
                s.push_back(arc.sign);
            return s;
        };
        return sign_of(a) < sign_of(b);
    }

    bool circuit(int v)
    {
        bool found = false;
        stack_.push_back(v);
        blocked_[v] = true;
        for (int w : succ_[v]) {
            if (stop_)
                break;
            if (w < root_ || w == v)
                continue; // below the root subgraph / interior self-arc
            if (w == root_) {
                emit_path(stack_, false);
                found = true;
            } else if (!blocked_[w]) {
                if (circuit(w))
                    found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (int w : succ_[v])
                if (w >= root_ && w != v)
                    unblock_list_[w].push_back(v);
        }
        stack_.pop_back();
        return found;
    }

    void unblock(int v)
    {
        blocked_[v] = false;
        std::vector<int> pending;
        pending.swap(unblock_list_[v]);
        for (int w : pending)
            if (blocked_[w])
                unblock(w);
    }

    // Expands the sign choices along the closed walk given by `path` and
    // records one cycle per combination, positive arcs first.
    void emit_path(const std::vector<int>& path, bool self_loop)
    {
        std::size_t len = self_loop ? 1 : path.size();
        std::vector<std::vector<Sign>> options(len);
        for (std::size_t i = 0; i < len; ++i) {
            int u = path[i];
            int v = path[(i + 1) % path.size()];
            if (graph_.has_arc(u, v, Sign::Positive))
                options[i].push_back(Sign::Positive);
            if (graph_.has_arc(u, v, Sign::Negative))
                options[i].push_back(Sign::Negative);
        }

        std::vector<std::size_t> choice(len, 0);
        while (true) {
            if (result_.cycles.size() >= max_cycles_) {
                result_.truncated = true;
                stop_ = true;
                return;
            }
            SignedCycle cycle;
            cycle.arcs.reserve(len);
            for (std::size_t i = 0; i < len; ++i)
                cycle.arcs.push_back(
                    SignedArc{path[i], path[(i + 1) % path.size()], options[i][choice[i]]});
            result_.cycles.push_back(std::move(cycle));

            std::size_t pos = len;
            while (pos > 0) {
                --pos;
                if (++choice[pos] < options[pos].size())
                    break;
                choice[pos] = 0;
                if (pos == 0)
                    return;
            }
        }
    }

    const SignedDigraph& graph_;
    std::size_t max_cycles_;
    int n_;
    int root_ = 0;
    bool stop_ = false;
    std::vector<std::vector<int>> succ_;
    std::vector<bool> blocked_;
    std::vector<std::vector<int>> unblock_list_;
    std::vector<int> stack_;
    CycleEnumeration result_;
};

} // namespace

CycleEnumeration enumerate_cycles(const SignedDigraph& g, std::size_t max_cycles)
{
    return CycleSearch(g, max_cycles).run();
}

std::vector<DelocalizingTriple> delocalizing_triples(const SignedDigraph& g, const SignedCycle& c)
{
    std::vector<DelocalizingTriple> triples;
    const std::vector<int> vset = c.vertex_set();
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v1 : vset) {
            SignedArc pos{u, v1, Sign::Positive};
            if (!g.has_arc(u, v1, Sign::Positive) || c.contains_arc(pos))
                continue;
            for (int v2 : vset) {
                if (v2 == v1)
                    continue;
                SignedArc neg{u, v2, Sign::Negative};
                if (!g.has_arc(u, v2, Sign::Negative) || c.contains_arc(neg))
                    continue;
                triples.push_back(DelocalizingTriple{u, v1, v2, c.contains_vertex(u)});
            }
        }
    }
    return triples;
}

namespace {

struct Bfs {
    std::vector<int> parent; // -2 unvisited, -1 root, else predecessor
    std::vector<int> order;  // discovery order, root excluded
    bool depth_cut = false;
};

// Breadth-first layers from k along positive arcs. `mediators_only`
// restricts interior vertices to single-input ones (the j-mediators of a
// negative path); the plain variant explores every positive arc. The root
// is never re-entered: a return to k cannot extend a simple path.
Bfs positive_bfs(const SignedDigraph& g, int k, std::size_t max_arcs, bool mediators_only)
{
    Bfs bfs;
    bfs.parent.assign(static_cast<std::size_t>(g.vertex_count()), -2);
    std::vector<std::size_t> depth(static_cast<std::size_t>(g.vertex_count()), 0);
    bfs.parent[k] = -1;
    std::vector<int> queue{k};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (const SignedArc& arc : g.arcs_from(v)) {
            if (arc.sign != Sign::Positive || arc.to == k)
                continue;
            if (mediators_only && g.in_arc_count(arc.to) != 1)
                continue;
            if (bfs.parent[arc.to] != -2)
                continue;
            if (depth[v] + 1 > max_arcs) {
                bfs.depth_cut = true;
                continue;
            }
            bfs.parent[arc.to] = v;
            depth[arc.to] = depth[v] + 1;
            bfs.order.push_back(arc.to);
            queue.push_back(arc.to);
        }
    }
    return bfs;
}

std::vector<SignedArc> path_from_parents(const Bfs& bfs, int target)
{
    std::vector<int> vertices{target};
    int v = target;
    while (bfs.parent[v] != -1) {
        v = bfs.parent[v];
        vertices.push_back(v);
    }
    std::reverse(vertices.begin(), vertices.end());
    std::vector<SignedArc> arcs;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        arcs.push_back(SignedArc{vertices[i], vertices[i + 1], Sign::Positive});
    return arcs;
}

} // namespace

WitnessSearchResult inconsistency_witnesses(const SignedDigraph& g, const SignedCycle& c,
                                            std::size_t max_path_len)
{
    WitnessSearchResult result;
    const int n = g.vertex_count();
    const std::size_t limit = max_path_len == 0 ? static_cast<std::size_t>(n) : max_path_len;
    const std::vector<int> vset = c.vertex_set();
    if (vset.size() < 2)
        return result; // pos_target != neg_target is impossible

    for (int k = 0; k < n; ++k) {
        Bfs pos = positive_bfs(g, k, limit, false);
        Bfs med = positive_bfs(g, k, limit == 0 ? 0 : limit - 1, true);
        result.budget_hit = result.budget_hit || pos.depth_cut || med.depth_cut;

        // Positive targets on the cycle. The pivot itself qualifies only
        // through a direct positive self-arc (the degenerate r = 0 path).
        std::vector<int> pos_targets;
        for (int t : vset) {
            if (t == k ? g.has_arc(k, k, Sign::Positive) : pos.parent[t] != -2)
                pos_targets.push_back(t);
        }
        if (pos_targets.empty())
            continue;

        // For each cycle vertex, the earliest mediator (or k itself) with a
        // negative arc into it. Mediators cannot coincide with the target:
        // a second input arc would contradict their single-input status.
        std::vector<int> neg_via(static_cast<std::size_t>(n), -2);
        for (int u : vset) {
            if (u == k) {
                if (g.has_arc(k, k, Sign::Negative))
                    neg_via[u] = k;
                continue;
            }
            if (g.has_arc(k, u, Sign::Negative)) {
                neg_via[u] = k;
                continue;
            }
            for (int w : med.order) {
                if (g.has_arc(w, u, Sign::Negative)) {
                    neg_via[u] = w;
                    break;
                }
            }
        }

        bool found = false;
        for (int t : pos_targets) {
            if (c.contains_arc(SignedArc{k, t, Sign::Positive}))
                continue;
            for (int u : vset) {
                if (u == t || neg_via[u] == -2)
                    continue;
                if (c.contains_arc(SignedArc{k, u, Sign::Negative}))
                    continue;

                InconsistencyWitness witness;
                witness.pivot = k;
                witness.pos_target = t;
                witness.neg_target = u;
                if (t == k)
                    witness.positive_path = {SignedArc{k, k, Sign::Positive}};
                else
                    witness.positive_path = path_from_parents(pos, t);
                int w = neg_via[u];
                if (w != k)
                    witness.negative_path = path_from_parents(med, w);
                witness.negative_path.push_back(SignedArc{w, u, Sign::Negative});
                result.witnesses.push_back(std::move(witness));
                found = true;
                break;
            }
            if (found)
                break;
        }
    }
    return result;
}

CycleClassification classify_cycles(const SignedDigraph& g, std::size_t max_cycles,
                                    std::size_t max_path_len)
{
    CycleClassification out;
    CycleEnumeration enumeration = enumerate_cycles(g, max_cycles);
    out.truncated = enumeration.truncated;

    for (SignedCycle& cycle : enumeration.cycles) {
        CycleRecord record;
        record.even = cycle.even();
        record.triples = delocalizing_triples(g, cycle);
        WitnessSearchResult search = inconsistency_witnesses(g, cycle, max_path_len);
        out.path_budget_hit = out.path_budget_hit || search.budget_hit;
        record.witnesses = std::move(search.witnesses);
        record.strong = record.triples.empty();
        record.consistent = record.witnesses.empty();
        for (const InconsistencyWitness& w : record.witnesses)
            record.pivots.push_back(w.pivot);
        record.cycle = std::move(cycle);

        // A triple is itself a zero-mediator witness, so this cannot fire.
        if (record.consistent && !record.strong)
            throw std::logic_error("cycle classified consistent but not strong");
        out.records.push_back(std::move(record));
    }
    return out;
}

LocalCycleCheck is_local_cycle(const BooleanNetwork& bn, const SignedCycle& c,
                               std::uint64_t max_states)
{
    int n = bn.variable_count();
    std::uint64_t count = std::uint64_t{1} << n;
    if (n >= 30 || count > max_states)
        throw StateSpaceTooLargeError("local-cycle check needs 2^" + std::to_string(n) +
                                      " states");
    for (State x = 0; x < count; ++x) {
        bool all = true;
        for (const SignedArc& arc : c.arcs) {
            const UpdateFunction& fn = bn.function(arc.to);
            bool low = evaluate(fn, state_with_bit(x, arc.from, false));
            bool high = evaluate(fn, state_with_bit(x, arc.from, true));
            bool present = arc.sign == Sign::Positive ? (!low && high) : (low && !high);
            if (!present) {
                all = false;
                break;
            }
        }
        if (all)
            return LocalCycleCheck{true, x};
    }
    return LocalCycleCheck{false, 0};
}

} // namespace andnot
