#pragma once

#include "andnot/covers.hpp"
#include "andnot/cycles.hpp"
#include "andnot/dynamics.hpp"
#include "andnot/influence.hpp"
#include "andnot/network.hpp"
#include "andnot/random_network.hpp"

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace andnot {

inline constexpr std::uint64_t kDefaultMaxStates = std::uint64_t{1} << 20;

struct AnalyzeOptions {
    bool verify = false; // run the exhaustive attractor oracle
    std::uint64_t max_states = kDefaultMaxStates;
    std::size_t max_cycles = 1'000'000;
    std::size_t max_path_len = 0; // 0: number of vertices
    SolveMode solve_mode = SolveMode::Exact;
    std::uint64_t exact_budget = 1'000'000;
};

struct BoundEntry {
    WitnessSet witness;
    bool certified = false;  // witness minimal and cycle enumeration complete
    std::uint64_t bound = 1; // 2^|witness|
};

struct OracleResult {
    AttractorSet attractors;
    std::vector<State> fixed_points;
};

struct Verdict {
    std::string name;
    bool pass = false;
    std::uint64_t observed = 0;
    std::uint64_t limit = 0;
};

struct BoundReport {
    BoundReport(BooleanNetwork bn, SignedDigraph ig)
        : network(std::move(bn)), influence_graph(std::move(ig))
    {
    }

    BooleanNetwork network;
    SignedDigraph influence_graph;
    CycleClassification classification;

    std::size_t cycle_total = 0;
    std::size_t cycle_even = 0;
    std::size_t cycle_strong_even = 0;
    std::size_t cycle_consistent_even = 0;

    BoundEntry even_fvs;
    BoundEntry strong_even;
    BoundEntry dominating;
    std::uint64_t fixed_point_bound = 1; // the dominating bound applied to fixed points

    std::optional<OracleResult> oracle;
    std::string oracle_skipped; // reason, when --verify could not run

    std::vector<Verdict> verdicts; // only for certified bounds with a completed oracle

    bool has_violation() const
    {
        for (const Verdict& v : verdicts)
            if (!v.pass)
                return true;
        return false;
    }
};

BoundReport analyze(const BooleanNetwork& bn, const AnalyzeOptions& options);

nlohmann::json report_to_json(const BoundReport& report);
std::string report_to_text(const BoundReport& report);

nlohmann::json classification_to_json(const CycleClassification& classification,
                                      const SignedDigraph& g);
nlohmann::json attractors_to_json(const AttractorSet& attractors, int variable_count);

struct CampaignConfig {
    GeneratorConfig generator; // seed of sample i is generator.seed + i
    int samples = 0;
    AnalyzeOptions analysis;
};

struct CampaignViolation {
    int sample_index = -1;
    std::uint64_t seed = 0;
    std::string check;
    std::string detail;
    std::string network_text; // serialized verbatim
};

struct CampaignSummary {
    int samples = 0;
    std::vector<CampaignViolation> violations;
};

/// Bulk property validation over seeded random networks. Each sample is
/// analyzed with the oracle and checked for: certified bounds covering the
/// attractor count, fixed points within attractors, uniqueness without
/// strong even cycles, attractor preservation under percolation,
/// structural/brute-force influence graph agreement, locality implying
/// strength, and bound monotonicity. Dynamics-based violations are
/// re-checked against the trap-set oracle before being recorded.
CampaignSummary verify_campaign(const CampaignConfig& config);

std::string campaign_to_text(const CampaignSummary& summary);

} // namespace andnot
