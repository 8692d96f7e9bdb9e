#include "andnot/report.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

std::uint64_t default_max_states()
{
    if (const char* env = std::getenv("ANDNOT_BOUNDS_MAX_STATES")) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0)
            return value;
        std::cerr << "warning: ignoring malformed ANDNOT_BOUNDS_MAX_STATES='" << env << "'\n";
    }
    return andnot::kDefaultMaxStates;
}

andnot::BooleanNetwork load_network(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return andnot::parse_network(buffer.str());
}

std::string stg_edge_list(const andnot::StateTransitionGraph& stg)
{
    std::ostringstream out;
    int n = stg.variable_count();
    for (std::uint64_t s = 0; s < stg.state_count(); ++s) {
        std::uint32_t mask = stg.unstable_mask(static_cast<andnot::State>(s));
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1)
                out << andnot::format_state(static_cast<andnot::State>(s), n) << " -> "
                    << andnot::format_state(static_cast<andnot::State>(s) ^
                                                (andnot::State{1} << v),
                                            n)
                    << '\n';
    }
    return out.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Attractor bounds for AND-NOT Boolean networks"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "text";
    andnot::AnalyzeOptions options;
    options.max_states = default_max_states();

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Cycle classification, witness sets, "
                                                      "attractor bounds, optional oracle check");
    analyze->add_option("file", file, "Network in .anbnet format")->required();
    analyze->add_flag("--verify", options.verify, "Run the exhaustive attractor oracle");
    analyze->add_option("--max-states", options.max_states, "State cap for oracle-style runs");
    analyze->add_option("--max-cycles", options.max_cycles, "Cycle enumeration budget");
    analyze->add_option("--exact-budget", options.exact_budget,
                        "Branch-and-bound node budget for the exact solver");
    add_format(analyze);
    bool greedy = false;
    bool exact = false;
    analyze->add_flag("--greedy", greedy, "Greedy hitting-set mode (bounds not certified)");
    analyze->add_flag("--exact", exact, "Exact hitting-set mode (default)");

    CLI::App* attractors = app.add_subcommand("attractors", "Exhaustive asynchronous attractors");
    attractors->add_option("file", file, "Network in .anbnet format")->required();
    attractors->add_option("--max-states", options.max_states, "State cap");
    bool dump_stg = false;
    attractors->add_flag("--dump-stg", dump_stg,
                         "Include the transition edge list (up to 10 variables)");
    add_format(attractors);

    andnot::GeneratorConfig generator;
    CLI::App* random = app.add_subcommand("random", "Emit a seeded random AND-NOT network");
    random->add_option("--nodes", generator.variable_count, "Variable count")->required();
    random->add_option("--seed", generator.seed, "Seed")->required();
    random->add_option("--min-lits", generator.min_literals, "Minimum literals per conjunction");
    random->add_option("--max-lits", generator.max_literals, "Maximum literals per conjunction");
    random->add_option("--neg-prob", generator.negative_probability,
                       "Probability of negating a literal");
    random->add_option("--const-prob", generator.constant_probability,
                       "Probability of a constant function");

    andnot::CampaignConfig campaign_config;
    CLI::App* campaign = app.add_subcommand("campaign", "Property campaign over seeded random "
                                                        "networks, verified against the oracle");
    campaign->add_option("--nodes", campaign_config.generator.variable_count, "Variable count")
        ->required();
    campaign->add_option("--samples", campaign_config.samples, "Sample count")->required();
    campaign->add_option("--seed", campaign_config.generator.seed, "Base seed");
    campaign->add_option("--min-lits", campaign_config.generator.min_literals,
                         "Minimum literals per conjunction");
    campaign->add_option("--max-lits", campaign_config.generator.max_literals,
                         "Maximum literals per conjunction");
    campaign->add_option("--neg-prob", campaign_config.generator.negative_probability,
                         "Probability of negating a literal");
    campaign->add_option("--const-prob", campaign_config.generator.constant_probability,
                         "Probability of a constant function");
    campaign->add_option("--max-states", campaign_config.analysis.max_states, "State cap");
    campaign->add_option("--max-cycles", campaign_config.analysis.max_cycles,
                         "Cycle enumeration budget");
    campaign->add_option("--exact-budget", campaign_config.analysis.exact_budget,
                         "Branch-and-bound node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) {
            if (greedy && exact)
                throw std::runtime_error("--exact and --greedy are mutually exclusive");
            options.solve_mode = greedy ? andnot::SolveMode::Greedy : andnot::SolveMode::Exact;
            andnot::BoundReport report = andnot::analyze(load_network(file), options);
            if (format == "json")
                std::cout << andnot::report_to_json(report).dump(2) << '\n';
            else
                std::cout << andnot::report_to_text(report);
            return report.has_violation() ? kExitViolation : kExitOk;
        }

        if (attractors->parsed()) {
            andnot::BooleanNetwork bn = load_network(file);
            andnot::StateTransitionGraph stg = andnot::build_astg(bn, options.max_states);
            andnot::AttractorSet set = andnot::attractors_scc(stg);
            if (dump_stg && bn.variable_count() > 10)
                throw std::runtime_error("--dump-stg supports at most 10 variables");
            if (format == "json") {
                nlohmann::json out = andnot::attractors_to_json(set, bn.variable_count());
                if (dump_stg) {
                    nlohmann::json transitions = nlohmann::json::array();
                    std::istringstream lines(stg_edge_list(stg));
                    std::string line;
                    while (std::getline(lines, line))
                        transitions.push_back(line);
                    out["transitions"] = transitions;
                }
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << set.count() << " attractor" << (set.count() == 1 ? "" : "s") << ", "
                          << set.fixed_point_count() << " fixed point"
                          << (set.fixed_point_count() == 1 ? "" : "s") << '\n';
                for (std::size_t i = 0; i < set.attractors.size(); ++i) {
                    const andnot::Attractor& a = set.attractors[i];
                    std::cout << "  A" << (i + 1) << " (" << (a.fixed_point ? "fixed" : "cyclic")
                              << "):";
                    for (andnot::State s : a.states)
                        std::cout << ' ' << andnot::format_state(s, bn.variable_count());
                    std::cout << '\n';
                }
                if (dump_stg)
                    std::cout << stg_edge_list(stg);
            }
            return kExitOk;
        }

        if (random->parsed()) {
            std::cout << andnot::serialize_network(andnot::generate_random(generator));
            return kExitOk;
        }

        if (campaign->parsed()) {
            andnot::CampaignSummary summary = andnot::verify_campaign(campaign_config);
            std::cout << andnot::campaign_to_text(summary);
            return summary.violations.empty() ? kExitOk : kExitViolation;
        }
    } catch (const andnot::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
