#include "andnot/covers.hpp"

#include <algorithm>
#include <stdexcept>

namespace andnot {

ConstraintFamily::ConstraintFamily(ConstraintKind kind, std::vector<Constraint> constraints,
                                   bool certified_source)
    : kind_(kind), constraints_(std::move(constraints)), certified_source_(certified_source)
{
    for (Constraint& c : constraints_) {
        std::sort(c.candidates.begin(), c.candidates.end());
        c.candidates.erase(std::unique(c.candidates.begin(), c.candidates.end()),
                           c.candidates.end());
        if (c.candidates.empty())
            throw std::invalid_argument("constraint '" + c.label + "' has no candidates");
    }
}

ConstraintFamily build_constraints(const CycleClassification& classification,
                                   ConstraintKind kind)
{
    std::vector<Constraint> constraints;
    for (std::size_t i = 0; i < classification.records.size(); ++i) {
        const CycleRecord& record = classification.records[i];
        if (!record.even)
            continue;
        std::string label = "C" + std::to_string(i + 1);
        std::vector<int> candidates = record.cycle.vertex_set();
        switch (kind) {
        case ConstraintKind::EvenFvs:
            constraints.push_back(Constraint{std::move(label), std::move(candidates)});
            break;
        case ConstraintKind::StrongEvenHit:
            if (record.strong)
                constraints.push_back(Constraint{std::move(label), std::move(candidates)});
            break;
        case ConstraintKind::Dominating:
            if (record.consistent) {
                constraints.push_back(Constraint{std::move(label), std::move(candidates)});
            } else if (record.strong) {
                candidates.insert(candidates.end(), record.pivots.begin(), record.pivots.end());
                constraints.push_back(Constraint{std::move(label), std::move(candidates)});
            }
            break;
        }
    }
    bool certified = !classification.truncated && !classification.path_budget_hit;
    return ConstraintFamily(kind, std::move(constraints), certified);
}

namespace {

struct Solver {
    const std::vector<Constraint>& constraints;
    std::vector<std::vector<int>> occurs; // variable -> constraint indices
    std::vector<int> hit_count;           // per constraint, by chosen variables
    std::vector<int> chosen;
    std::vector<int> best;
    bool have_best = false;
    std::uint64_t nodes = 0;
    std::uint64_t node_budget;
    bool budget_exceeded = false;
    int max_var = 0;

    Solver(const ConstraintFamily& family, std::uint64_t budget)
        : constraints(family.constraints()), node_budget(budget)
    {
        for (const Constraint& c : constraints)
            for (int v : c.candidates)
                max_var = std::max(max_var, v + 1);
        occurs.resize(static_cast<std::size_t>(max_var));
        for (std::size_t i = 0; i < constraints.size(); ++i)
            for (int v : constraints[i].candidates)
                occurs[v].push_back(static_cast<int>(i));
        hit_count.assign(constraints.size(), 0);
    }

    void choose(int v)
    {
        chosen.push_back(v);
        for (int ci : occurs[v])
            ++hit_count[ci];
    }

    void unchoose(int v)
    {
        chosen.pop_back();
        for (int ci : occurs[v])
            --hit_count[ci];
    }

    // Pairwise-disjoint unhit constraints each need their own element.
    int lower_bound() const
    {
        std::vector<bool> used(static_cast<std::size_t>(max_var), false);
        int bound = 0;
        for (std::size_t i = 0; i < constraints.size(); ++i) {
            if (hit_count[i] > 0)
                continue;
            bool disjoint = true;
            for (int v : constraints[i].candidates)
                if (used[v]) {
                    disjoint = false;
                    break;
                }
            if (!disjoint)
                continue;
            ++bound;
            for (int v : constraints[i].candidates)
                used[v] = true;
        }
        return bound;
    }

    void record_candidate()
    {
        std::vector<int> sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        if (!have_best || sorted.size() < best.size() ||
            (sorted.size() == best.size() && sorted < best)) {
            best = std::move(sorted);
            have_best = true;
        }
    }

    void search()
    {
        if (budget_exceeded)
            return;
        if (++nodes > node_budget) {
            budget_exceeded = true;
            return;
        }

        int branch = -1;
        std::size_t branch_size = 0;
        for (std::size_t i = 0; i < constraints.size(); ++i) {
            if (hit_count[i] > 0)
                continue;
            std::size_t size = constraints[i].candidates.size();
            if (branch < 0 || size < branch_size) {
                branch = static_cast<int>(i);
                branch_size = size;
            }
        }
        if (branch < 0) {
            record_candidate();
            return;
        }
        if (have_best && chosen.size() + static_cast<std::size_t>(lower_bound()) > best.size())
            return;

        for (int v : constraints[static_cast<std::size_t>(branch)].candidates) {
            choose(v);
            search();
            unchoose(v);
            if (budget_exceeded)
                return;
        }
    }
};

WitnessSet solve_greedy(const ConstraintFamily& family)
{
    WitnessSet result;
    result.method = SolveMode::Greedy;
    result.certified_minimal = family.empty();

    const auto& constraints = family.constraints();
    std::vector<bool> hit(constraints.size(), false);
    std::size_t remaining = constraints.size();
    while (remaining > 0) {
        int best_var = -1;
        int best_cover = 0;
        int max_var = 0;
        for (const Constraint& c : constraints)
            for (int v : c.candidates)
                max_var = std::max(max_var, v + 1);
        std::vector<int> cover(static_cast<std::size_t>(max_var), 0);
        for (std::size_t i = 0; i < constraints.size(); ++i)
            if (!hit[i])
                for (int v : constraints[i].candidates)
                    ++cover[v];
        for (int v = 0; v < max_var; ++v)
            if (cover[v] > best_cover) {
                best_cover = cover[v];
                best_var = v;
            }
        result.members.push_back(best_var);
        for (std::size_t i = 0; i < constraints.size(); ++i)
            if (!hit[i] &&
                std::binary_search(constraints[i].candidates.begin(),
                                   constraints[i].candidates.end(), best_var)) {
                hit[i] = true;
                --remaining;
            }
    }
    std::sort(result.members.begin(), result.members.end());
    return result;
}

void check_hits_all(const ConstraintFamily& family, const std::vector<int>& members)
{
    for (const Constraint& c : family.constraints()) {
        bool ok = false;
        for (int v : members)
            if (std::binary_search(c.candidates.begin(), c.candidates.end(), v)) {
                ok = true;
                break;
            }
        if (!ok)
            throw std::logic_error("hitting set misses constraint '" + c.label + "'");
    }
}

} // namespace

WitnessSet min_hitting_set(const ConstraintFamily& family, SolveMode mode,
                           std::uint64_t node_budget)
{
    if (family.empty())
        return WitnessSet{{}, true, mode, false};

    if (mode == SolveMode::Greedy) {
        WitnessSet result = solve_greedy(family);
        check_hits_all(family, result.members);
        return result;
    }

    Solver solver(family, node_budget);
    solver.search();
    if (solver.budget_exceeded || !solver.have_best) {
        WitnessSet result = solve_greedy(family);
        result.exact_budget_exceeded = true;
        result.certified_minimal = false;
        check_hits_all(family, result.members);
        return result;
    }

    WitnessSet result;
    result.members = solver.best;
    result.certified_minimal = true;
    result.method = SolveMode::Exact;
    check_hits_all(family, result.members);
    return result;
}

} // namespace andnot
