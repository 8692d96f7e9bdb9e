#include "andnot/report.hpp"

#include <algorithm>
#include <sstream>

namespace andnot {

namespace {

std::uint64_t power_of_two_bound(std::size_t witness_size)
{
    if (witness_size >= 63)
        return ~std::uint64_t{0}; // saturate; only relevant for huge witnesses
    return std::uint64_t{1} << witness_size;
}

BoundEntry make_entry(const ConstraintFamily& family, const AnalyzeOptions& options)
{
    BoundEntry entry;
    entry.witness = min_hitting_set(family, options.solve_mode, options.exact_budget);
    entry.certified = entry.witness.certified_minimal && family.certified_source();
    entry.bound = power_of_two_bound(entry.witness.members.size());
    return entry;
}

} // namespace

BoundReport analyze(const BooleanNetwork& bn, const AnalyzeOptions& options)
{
    BoundReport report{bn, structural_global_ig(bn)};
    report.classification =
        classify_cycles(report.influence_graph, options.max_cycles, options.max_path_len);

    for (const CycleRecord& record : report.classification.records) {
        ++report.cycle_total;
        if (!record.even)
            continue;
        ++report.cycle_even;
        if (record.strong)
            ++report.cycle_strong_even;
        if (record.consistent)
            ++report.cycle_consistent_even;
    }

    report.even_fvs =
        make_entry(build_constraints(report.classification, ConstraintKind::EvenFvs), options);
    report.strong_even = make_entry(
        build_constraints(report.classification, ConstraintKind::StrongEvenHit), options);
    report.dominating = make_entry(
        build_constraints(report.classification, ConstraintKind::Dominating), options);
    report.fixed_point_bound = report.dominating.bound;

    if (options.verify) {
        int n = bn.variable_count();
        if (n >= 30 || (std::uint64_t{1} << n) > options.max_states) {
            report.oracle_skipped = "state space 2^" + std::to_string(n) +
                                    " exceeds cap " + std::to_string(options.max_states);
        } else {
            OracleResult oracle;
            StateTransitionGraph stg = build_astg(bn, options.max_states);
            oracle.attractors = attractors_scc(stg);
            oracle.fixed_points = fixed_points(bn, options.max_states);
            report.oracle = std::move(oracle);
        }
    }

    if (report.oracle) {
        std::uint64_t count = report.oracle->attractors.count();
        std::uint64_t fp_count = report.oracle->fixed_points.size();
        auto add = [&](const std::string& name, std::uint64_t observed, std::uint64_t limit) {
            report.verdicts.push_back(Verdict{name, observed <= limit, observed, limit});
        };
        if (report.even_fvs.certified)
            add("even_fvs", count, report.even_fvs.bound);
        if (report.strong_even.certified)
            add("strong_even", count, report.strong_even.bound);
        if (report.dominating.certified) {
            add("dominating", count, report.dominating.bound);
            add("fixed_points", fp_count, report.fixed_point_bound);
        }
    }
    return report;
}

nlohmann::json classification_to_json(const CycleClassification& classification,
                                      const SignedDigraph& g)
{
    nlohmann::json cycles = nlohmann::json::array();
    for (const CycleRecord& record : classification.records) {
        nlohmann::json vertices = nlohmann::json::array();
        nlohmann::json signs = nlohmann::json::array();
        for (const SignedArc& arc : record.cycle.arcs) {
            vertices.push_back(g.name(arc.from));
            signs.push_back(std::string(1, sign_char(arc.sign)));
        }
        nlohmann::json triples = nlohmann::json::array();
        for (const DelocalizingTriple& t : record.triples)
            triples.push_back({{"pivot", g.name(t.pivot)},
                               {"positive_target", g.name(t.pos_target)},
                               {"negative_target", g.name(t.neg_target)},
                               {"kind", t.internal ? "internal" : "external"}});
        nlohmann::json pivots = nlohmann::json::array();
        for (int pivot : record.pivots)
            pivots.push_back(g.name(pivot));
        cycles.push_back({{"vertices", vertices},
                          {"signs", signs},
                          {"parity", record.even ? "even" : "odd"},
                          {"strong", record.strong},
                          {"consistent", record.consistent},
                          {"triples", triples},
                          {"pivots", pivots}});
    }
    return {{"cycles", cycles}, {"truncated", classification.truncated}};
}

nlohmann::json attractors_to_json(const AttractorSet& attractors, int variable_count)
{
    nlohmann::json list = nlohmann::json::array();
    for (const Attractor& a : attractors.attractors) {
        nlohmann::json states = nlohmann::json::array();
        for (State s : a.states)
            states.push_back(format_state(s, variable_count));
        list.push_back({{"states", states}, {"kind", a.fixed_point ? "fixed" : "cyclic"}});
    }
    return {{"attractors", list}, {"count", attractors.count()}};
}

namespace {

nlohmann::json entry_to_json(const BoundEntry& entry, const BooleanNetwork& bn)
{
    nlohmann::json witness = nlohmann::json::array();
    for (int v : entry.witness.members)
        witness.push_back(bn.name(v));
    return {{"witness", witness},
            {"size", entry.witness.members.size()},
            {"bound", entry.bound},
            {"certified", entry.certified},
            {"method", entry.witness.method == SolveMode::Exact ? "exact" : "greedy"},
            {"exact_budget_exceeded", entry.witness.exact_budget_exceeded}};
}

std::string render_cycle(const SignedCycle& cycle, const SignedDigraph& g)
{
    std::ostringstream out;
    for (const SignedArc& arc : cycle.arcs)
        out << g.name(arc.from) << " -(" << sign_char(arc.sign) << ")-> ";
    out << g.name(cycle.arcs.front().from);
    return out.str();
}

std::string render_members(const std::vector<int>& members, const BooleanNetwork& bn)
{
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += bn.name(members[i]);
    }
    return out + "}";
}

} // namespace

nlohmann::json report_to_json(const BoundReport& report)
{
    const BooleanNetwork& bn = report.network;
    nlohmann::json functions = nlohmann::json::array();
    {
        std::istringstream lines(serialize_network(bn));
        std::string line;
        while (std::getline(lines, line))
            functions.push_back(line);
    }

    nlohmann::json out{
        {"network",
         {{"n", bn.variable_count()}, {"variables", bn.names()}, {"functions", functions}}},
        {"influence_graph", graph_to_json(report.influence_graph)},
        {"cycles", classification_to_json(report.classification, report.influence_graph)},
        {"cycle_stats",
         {{"total", report.cycle_total},
          {"even", report.cycle_even},
          {"strong_even", report.cycle_strong_even},
          {"consistent_even", report.cycle_consistent_even}}},
        {"bounds",
         {{"even_fvs", entry_to_json(report.even_fvs, bn)},
          {"strong_even", entry_to_json(report.strong_even, bn)},
          {"dominating", entry_to_json(report.dominating, bn)},
          {"fixed_point_bound", report.fixed_point_bound}}},
    };

    if (report.oracle) {
        nlohmann::json oracle = attractors_to_json(report.oracle->attractors, bn.variable_count());
        nlohmann::json fps = nlohmann::json::array();
        for (State s : report.oracle->fixed_points)
            fps.push_back(format_state(s, bn.variable_count()));
        oracle["fixed_points"] = fps;
        oracle["fixed_point_count"] = report.oracle->fixed_points.size();
        out["oracle"] = oracle;
    }
    if (!report.oracle_skipped.empty())
        out["oracle_skipped"] = report.oracle_skipped;
    if (!report.verdicts.empty()) {
        nlohmann::json verdicts;
        for (const Verdict& v : report.verdicts)
            verdicts[v.name] = v.pass ? "PASS" : "FAIL";
        out["verdicts"] = verdicts;
    }
    return out;
}

std::string report_to_text(const BoundReport& report)
{
    const BooleanNetwork& bn = report.network;
    const SignedDigraph& g = report.influence_graph;
    std::ostringstream out;

    out << "AND-NOT network: " << bn.variable_count() << " variables\n";
    std::istringstream lines(serialize_network(bn));
    std::string line;
    while (std::getline(lines, line))
        out << "  " << line << '\n';

    out << "influence graph: " << g.vertex_count() << " vertices, " << g.arcs().size()
        << " arcs\n";
    std::istringstream arcs(graph_to_edge_list(g));
    while (std::getline(arcs, line))
        out << "  " << line << '\n';

    out << "cycles: " << report.cycle_total << " total (" << report.cycle_even << " even, "
        << (report.cycle_total - report.cycle_even) << " odd); strong even: "
        << report.cycle_strong_even << "; consistent even: " << report.cycle_consistent_even
        << '\n';
    if (report.classification.truncated)
        out << "  warning: cycle enumeration truncated; bounds below are not certified\n";
    for (std::size_t i = 0; i < report.classification.records.size(); ++i) {
        const CycleRecord& record = report.classification.records[i];
        out << "  C" << (i + 1) << ": " << render_cycle(record.cycle, g) << "  ["
            << (record.even ? "even" : "odd");
        if (record.even)
            out << (record.strong ? ", strong" : ", not strong")
                << (record.consistent ? ", consistent" : ", inconsistent");
        out << "]\n";
        for (const DelocalizingTriple& t : record.triples)
            out << "      delocalizing triple (" << g.name(t.pivot) << ", +" << g.name(t.pos_target)
                << ", -" << g.name(t.neg_target) << ") "
                << (t.internal ? "internal" : "external") << '\n';
        if (!record.pivots.empty()) {
            out << "      inconsistency pivots:";
            for (int pivot : record.pivots)
                out << ' ' << g.name(pivot);
            out << '\n';
        }
    }

    auto bound_line = [&](const char* title, const BoundEntry& entry) {
        out << "  " << title << ' ' << render_members(entry.witness.members, bn) << " size "
            << entry.witness.members.size() << " -> at most " << entry.bound << " attractor"
            << (entry.bound == 1 ? "" : "s") << ' '
            << (entry.certified ? "[certified]" : "[not certified]") << '\n';
    };
    out << "bounds on asynchronous attractors:\n";
    bound_line("even feedback vertex set     ", report.even_fvs);
    bound_line("strong even cycle hitting set", report.strong_even);
    bound_line("dominating set               ", report.dominating);
    out << "fixed points: at most " << report.fixed_point_bound << " (dominating bound)\n";

    if (report.oracle) {
        const AttractorSet& attractors = report.oracle->attractors;
        out << "oracle (2^" << bn.variable_count() << " states): " << attractors.count()
            << " attractor" << (attractors.count() == 1 ? "" : "s") << ", "
            << report.oracle->fixed_points.size() << " fixed point"
            << (report.oracle->fixed_points.size() == 1 ? "" : "s") << '\n';
        for (std::size_t i = 0; i < attractors.attractors.size(); ++i) {
            const Attractor& a = attractors.attractors[i];
            out << "  A" << (i + 1) << " (" << (a.fixed_point ? "fixed" : "cyclic") << ", "
                << a.states.size() << " state" << (a.states.size() == 1 ? "" : "s") << "):";
            for (State s : a.states)
                out << ' ' << format_state(s, bn.variable_count());
            out << '\n';
        }
    }
    if (!report.oracle_skipped.empty())
        out << "oracle skipped: " << report.oracle_skipped << '\n';
    if (!report.verdicts.empty()) {
        out << "verdicts:\n";
        for (const Verdict& v : report.verdicts)
            out << "  " << v.name << ": " << (v.pass ? "PASS" : "FAIL") << " (" << v.observed
                << " <= " << v.limit << (v.pass ? ")" : " violated)") << '\n';
    }
    return out.str();
}

namespace {

// Attractor counts feeding a violation report are re-derived through the
// trap-set oracle first, so a defect in the SCC route cannot fabricate a
// counterexample to a bound theorem. Disagreement between the two routes
// is itself reported.
class CampaignChecker {
public:
    CampaignChecker(CampaignSummary& summary, int sample_index, std::uint64_t seed,
                    const BooleanNetwork& bn)
        : summary_(summary), sample_index_(sample_index), seed_(seed), bn_(bn),
          text_(serialize_network(bn))
    {
    }

    void record(const std::string& check, const std::string& detail)
    {
        summary_.violations.push_back(
            CampaignViolation{sample_index_, seed_, check, detail, text_});
    }

    // True when the trap-set oracle confirms the SCC attractor set.
    bool confirm(const StateTransitionGraph& stg, const AttractorSet& from_scc)
    {
        if (stg.state_count() > 4096) {
            record("recheck-skipped", "state space too large for the trap-set oracle");
            return true;
        }
        AttractorSet from_traps = attractors_trapset_oracle(stg, 4096);
        if (from_traps == from_scc)
            return true;
        record("internal-scc-mismatch",
               "terminal-SCC attractors disagree with the trap-set oracle");
        return false;
    }

private:
    CampaignSummary& summary_;
    int sample_index_;
    std::uint64_t seed_;
    const BooleanNetwork& bn_;
    std::string text_;
};

} // namespace

CampaignSummary verify_campaign(const CampaignConfig& config)
{
    CampaignSummary summary;
    for (int i = 0; i < config.samples; ++i) {
        GeneratorConfig generator = config.generator;
        generator.seed += static_cast<std::uint64_t>(i);
        BooleanNetwork bn = generate_random(generator);

        AnalyzeOptions options = config.analysis;
        options.verify = true;
        BoundReport report = analyze(bn, options);
        if (!report.oracle)
            throw std::invalid_argument("campaign requires the oracle: " + report.oracle_skipped);
        ++summary.samples;

        CampaignChecker checker(summary, i, generator.seed, bn);
        StateTransitionGraph stg = build_astg(bn, options.max_states);
        const AttractorSet& attractors = report.oracle->attractors;
        std::uint64_t count = attractors.count();
        std::uint64_t fp_count = report.oracle->fixed_points.size();

        auto check_bound = [&](const char* name, const BoundEntry& entry) {
            if (!entry.certified || count <= entry.bound)
                return;
            if (checker.confirm(stg, attractors))
                checker.record(name, std::to_string(count) + " attractors exceed bound " +
                                          std::to_string(entry.bound));
        };
        check_bound("strong-even-bound", report.strong_even);
        check_bound("dominating-bound", report.dominating);

        if (fp_count > count && checker.confirm(stg, attractors))
            checker.record("fixed-points-exceed-attractors",
                           std::to_string(fp_count) + " fixed points vs " +
                               std::to_string(count) + " attractors");

        if (report.cycle_strong_even == 0 && count != 1 && checker.confirm(stg, attractors))
            checker.record("unique-attractor-without-strong-even-cycle",
                           std::to_string(count) + " attractors");

        BooleanNetwork percolated = percolate_full(bn);
        StateTransitionGraph stg_percolated = build_astg(percolated, options.max_states);
        AttractorSet after = attractors_scc(stg_percolated);
        if (after != attractors) {
            bool both_confirmed =
                checker.confirm(stg, attractors) && checker.confirm(stg_percolated, after);
            if (both_confirmed)
                checker.record("percolation-attractors",
                               "attractor set changed under full percolation");
        }

        if (bruteforce_global_ig(bn, options.max_states) != report.influence_graph)
            checker.record("influence-graph-mismatch",
                           "structural and brute-force influence graphs differ");

        for (std::size_t c = 0; c < report.classification.records.size(); ++c) {
            const CycleRecord& record = report.classification.records[c];
            if (record.strong)
                continue;
            if (is_local_cycle(bn, record.cycle, options.max_states).local)
                checker.record("local-cycle-not-strong",
                               "cycle C" + std::to_string(c + 1) + " is local but has triples");
        }

        if (report.even_fvs.certified && report.strong_even.certified &&
            report.dominating.certified) {
            std::size_t fvs = report.even_fvs.witness.members.size();
            std::size_t strong = report.strong_even.witness.members.size();
            std::size_t dom = report.dominating.witness.members.size();
            if (!(dom <= strong && strong <= fvs))
                checker.record("bound-monotonicity",
                               "witness sizes " + std::to_string(dom) + "/" +
                                   std::to_string(strong) + "/" + std::to_string(fvs) +
                                   " are not monotone");
        }
    }
    return summary;
}

std::string campaign_to_text(const CampaignSummary& summary)
{
    std::ostringstream out;
    out << "campaign: " << summary.samples << " samples, " << summary.violations.size()
        << " violation" << (summary.violations.size() == 1 ? "" : "s") << '\n';
    for (const CampaignViolation& v : summary.violations) {
        out << "violation [" << v.check << "] sample " << v.sample_index << " (seed " << v.seed
            << "): " << v.detail << '\n';
        std::istringstream lines(v.network_text);
        std::string line;
        while (std::getline(lines, line))
            out << "    " << line << '\n';
    }
    return out.str();
}

} // namespace andnot
