#pragma once

#include "andnot/cycles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace andnot {

enum class ConstraintKind : std::uint8_t { EvenFvs, StrongEvenHit, Dominating };

struct Constraint {
    std::string label;           // source cycle, e.g. "C3"
    std::vector<int> candidates; // sorted distinct variables, never empty
};

class ConstraintFamily {
public:
    /// Throws std::invalid_argument when a constraint has an empty
    /// candidate set (the instance would be infeasible).
    ConstraintFamily(ConstraintKind kind, std::vector<Constraint> constraints,
                     bool certified_source);

    ConstraintKind kind() const { return kind_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    bool empty() const { return constraints_.empty(); }

    /// False when the cycle enumeration behind the family was truncated:
    /// a missed cycle could be unhit, so bounds built on it are not
    /// theorem instances.
    bool certified_source() const { return certified_source_; }

private:
    ConstraintKind kind_;
    std::vector<Constraint> constraints_;
    bool certified_source_;
};

/// EvenFvs: one constraint V(C) per even cycle. StrongEvenHit: V(C) per
/// strong even cycle. Dominating: V(C) per consistent even cycle and
/// V(C) + pivots per strong-but-inconsistent even cycle; non-strong even
/// cycles and odd cycles impose nothing.
ConstraintFamily build_constraints(const CycleClassification& classification,
                                   ConstraintKind kind);

enum class SolveMode : std::uint8_t { Exact, Greedy };

struct WitnessSet {
    std::vector<int> members; // sorted ascending
    bool certified_minimal = false;
    SolveMode method = SolveMode::Exact;
    bool exact_budget_exceeded = false;
};

/// Minimum hitting set of the family. Exact mode runs branch-and-bound
/// (branching on an unhit constraint, elements in ascending variable
/// order) and returns the lexicographically smallest optimum; past the
/// node budget it falls back to greedy with a flag. Greedy picks the
/// variable covering the most unhit constraints, ties by variable order.
WitnessSet min_hitting_set(const ConstraintFamily& family, SolveMode mode,
                           std::uint64_t node_budget = 1'000'000);

} // namespace andnot
