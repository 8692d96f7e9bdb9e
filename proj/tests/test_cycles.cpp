#include "andnot/cycles.hpp"
#include "andnot/random_network.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace andnot;
using andnot::testing::four_node_example;
using andnot::testing::three_node_example;

namespace {

std::vector<std::vector<int>> sequences(const std::vector<SignedCycle>& cycles)
{
    std::vector<std::vector<int>> out;
    for (const SignedCycle& c : cycles)
        out.push_back(c.vertex_sequence());
    return out;
}

} // namespace

TEST_CASE("cycle enumeration on the three-node example")
{
    SignedDigraph g = structural_global_ig(three_node_example());
    CycleEnumeration e = enumerate_cycles(g);
    REQUIRE(!e.truncated);
    REQUIRE(e.cycles.size() == 3);
    CHECK(sequences(e.cycles) ==
          std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 2, 1}});
    CHECK(e.cycles[0].even());      // a -| b -| a
    CHECK(!e.cycles[1].even());     // a -| c -> a
    CHECK(!e.cycles[2].even());     // a -| c -| b -| a
    CHECK(e.cycles[2].negative_arc_count() == 3);
}

TEST_CASE("cycle enumeration on the four-node example")
{
    SignedDigraph g = structural_global_ig(four_node_example());
    CycleEnumeration e = enumerate_cycles(g);
    REQUIRE(e.cycles.size() == 3);
    CHECK(sequences(e.cycles) == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {3}});
    CHECK(e.cycles[0].even());  // a -> b -> a
    CHECK(!e.cycles[1].even()); // c -| d -> c
    CHECK(e.cycles[2].even());  // d -> d, positive self-loop
}

TEST_CASE("acyclic graph has no cycles")
{
    SignedDigraph g = structural_global_ig(parse_network("a, 1\nb, a\nc, a & !b"));
    CHECK(enumerate_cycles(g).cycles.empty());
}

TEST_CASE("cycle budget truncates with a flag")
{
    SignedDigraph g = structural_global_ig(three_node_example());
    CycleEnumeration e = enumerate_cycles(g, 1);
    CHECK(e.truncated);
    CHECK(e.cycles.size() == 1);
}

TEST_CASE("enumeration matches the subset-permutation oracle")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        SeededRng rng(seed);
        int n = 2 + static_cast<int>(rng.next_below(6)); // up to 7 vertices
        SignedDigraph g =
            andnot::testing::random_signed_digraph(rng, n, 0.3, 0.5, seed % 3 == 0);
        CycleEnumeration fast = enumerate_cycles(g);
        REQUIRE(!fast.truncated);
        CHECK(fast.cycles == andnot::testing::cycles_bruteforce(g));
    }
}

TEST_CASE("enumeration is deterministic")
{
    SeededRng rng(99);
    SignedDigraph g = andnot::testing::random_signed_digraph(rng, 7, 0.4, 0.5, true);
    CHECK(enumerate_cycles(g).cycles == enumerate_cycles(g).cycles);
}

TEST_CASE("delocalizing triples on the three-node example")
{
    SignedDigraph g = structural_global_ig(three_node_example());
    CycleEnumeration e = enumerate_cycles(g);

    std::vector<DelocalizingTriple> triples = delocalizing_triples(g, e.cycles[0]);
    REQUIRE(triples.size() == 1);
    CHECK(triples[0] == DelocalizingTriple{2, 0, 1, false}); // (c, a, b), external

    CHECK(delocalizing_triples(g, e.cycles[1]).empty());
    CHECK(delocalizing_triples(g, e.cycles[2]).empty());
}

TEST_CASE("self-loop cycles never have triples")
{
    SignedDigraph g = structural_global_ig(four_node_example());
    SignedCycle self{{SignedArc{3, 3, Sign::Positive}}};
    CHECK(delocalizing_triples(g, self).empty());
}

TEST_CASE("inconsistency witnesses on the four-node example")
{
    SignedDigraph g = structural_global_ig(four_node_example());
    CycleEnumeration e = enumerate_cycles(g);

    SUBCASE("the two-cycle a/b is made inconsistent by d")
    {
        WitnessSearchResult r = inconsistency_witnesses(g, e.cycles[0]);
        REQUIRE(r.witnesses.size() == 1);
        const InconsistencyWitness& w = r.witnesses[0];
        CHECK(w.pivot == 3);
        CHECK(w.pos_target == 0);
        CHECK(w.neg_target == 1);
        CHECK(w.positive_path == std::vector<SignedArc>{SignedArc{3, 0, Sign::Positive}});
        CHECK(w.negative_path == std::vector<SignedArc>{SignedArc{3, 2, Sign::Positive},
                                                        SignedArc{2, 1, Sign::Negative}});
    }
    SUBCASE("a one-vertex cycle cannot be inconsistent")
    {
        CHECK(inconsistency_witnesses(g, e.cycles[2]).witnesses.empty());
    }
}

TEST_CASE("every delocalizing triple degenerates to a witness")
{
    for (std::uint64_t seed = 700; seed < 760; ++seed) {
        SeededRng rng(seed);
        SignedDigraph g = andnot::testing::random_signed_digraph(rng, 6, 0.3, 0.5, false);
        CycleEnumeration enumeration = enumerate_cycles(g);
        for (const SignedCycle& cycle : enumeration.cycles) {
            auto triples = delocalizing_triples(g, cycle);
            auto witnesses = inconsistency_witnesses(g, cycle).witnesses;
            std::vector<int> pivots;
            for (const InconsistencyWitness& w : witnesses)
                pivots.push_back(w.pivot);
            for (const DelocalizingTriple& t : triples)
                CHECK(std::find(pivots.begin(), pivots.end(), t.pivot) != pivots.end());
        }
    }
}

TEST_CASE("classification of the worked examples")
{
    SUBCASE("three-node example")
    {
        SignedDigraph g = structural_global_ig(three_node_example());
        CycleClassification c = classify_cycles(g);
        REQUIRE(c.records.size() == 3);
        CHECK((c.records[0].even && !c.records[0].strong && !c.records[0].consistent));
        CHECK((!c.records[1].even && c.records[1].strong));
        CHECK((!c.records[2].even && c.records[2].strong));
    }
    SUBCASE("four-node example")
    {
        SignedDigraph g = structural_global_ig(four_node_example());
        CycleClassification c = classify_cycles(g);
        REQUIRE(c.records.size() == 3);
        CHECK((c.records[0].even && c.records[0].strong && !c.records[0].consistent));
        CHECK(c.records[0].pivots == std::vector<int>{3});
        CHECK((c.records[2].even && c.records[2].strong && c.records[2].consistent));
    }
    SUBCASE("acyclic graph")
    {
        SignedDigraph g = structural_global_ig(parse_network("a, 1\nb, a"));
        CHECK(classify_cycles(g).records.empty());
    }
}

TEST_CASE("consistent cycles are strong on random graphs")
{
    for (std::uint64_t seed = 800; seed < 880; ++seed) {
        SeededRng rng(seed);
        SignedDigraph g = andnot::testing::random_signed_digraph(rng, 6, 0.35, 0.5, false);
        CycleClassification classification = classify_cycles(g);
        for (const CycleRecord& record : classification.records)
            if (record.consistent)
                CHECK(record.strong);
    }
}

TEST_CASE("witness search is deterministic")
{
    SeededRng rng(4242);
    SignedDigraph g = andnot::testing::random_signed_digraph(rng, 7, 0.35, 0.5, false);
    CycleEnumeration enumeration = enumerate_cycles(g);
    for (const SignedCycle& cycle : enumeration.cycles) {
        auto a = inconsistency_witnesses(g, cycle);
        auto b = inconsistency_witnesses(g, cycle);
        REQUIRE(a.witnesses.size() == b.witnesses.size());
        for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
            CHECK(a.witnesses[i].pivot == b.witnesses[i].pivot);
            CHECK(a.witnesses[i].positive_path == b.witnesses[i].positive_path);
            CHECK(a.witnesses[i].negative_path == b.witnesses[i].negative_path);
        }
    }
}

TEST_CASE("local cycle detection")
{
    SUBCASE("mutual inhibition is local everywhere")
    {
        BooleanNetwork bn = parse_network("a, !b\nb, !a");
        SignedDigraph g = structural_global_ig(bn);
        CycleEnumeration e = enumerate_cycles(g);
        REQUIRE(e.cycles.size() == 1);
        LocalCycleCheck check = is_local_cycle(bn, e.cycles[0], 1 << 20);
        CHECK(check.local);
        CHECK(check.witness == 0); // already holds at 00
    }
    SUBCASE("a cycle through a constant vertex is never local")
    {
        BooleanNetwork bn = parse_network("a, 0\nb, a");
        SignedCycle fake{{SignedArc{0, 1, Sign::Positive}, SignedArc{1, 0, Sign::Positive}}};
        CHECK(!is_local_cycle(bn, fake, 1 << 20).local);
    }
}

TEST_CASE("local cycles of AND-NOT networks are strong")
{
    for (std::uint64_t seed = 900; seed < 960; ++seed) {
        GeneratorConfig config;
        config.variable_count = 6;
        config.seed = seed;
        BooleanNetwork bn = generate_random(config);
        SignedDigraph g = structural_global_ig(bn);
        CycleClassification classification = classify_cycles(g);
        for (const CycleRecord& record : classification.records)
            if (is_local_cycle(bn, record.cycle, 1 << 20).local)
                CHECK(record.strong);
    }
}

TEST_CASE("classification propagates the truncation flag")
{
    SignedDigraph g = structural_global_ig(three_node_example());
    CycleClassification c = classify_cycles(g, 2);
    CHECK(c.truncated);
    CHECK(c.records.size() == 2);
}

TEST_CASE("a positive self-loop can pivot its own cycle")
{
    // The three-cycle a -| c -> b -| a has the internal triple (a, a, b):
    // the self-loop is the positive arc, so the degenerate witness must use
    // the pivot as its own positive target.
    BooleanNetwork bn = parse_network("a, a & !b\nb, c & !a\nc, !a");
    SignedDigraph g = structural_global_ig(bn);
    CycleClassification c = classify_cycles(g);
    REQUIRE(c.records.size() == 3);

    const CycleRecord& self_loop = c.records[0];
    CHECK(self_loop.cycle.vertex_sequence() == std::vector<int>{0});
    CHECK((self_loop.even && self_loop.strong && self_loop.consistent));

    const CycleRecord& pair = c.records[1];
    CHECK(pair.cycle.vertex_sequence() == std::vector<int>{0, 1});
    CHECK((pair.even && pair.strong && pair.consistent));

    const CycleRecord& triangle = c.records[2];
    CHECK(triangle.cycle.vertex_sequence() == std::vector<int>{0, 2, 1});
    CHECK(triangle.even);
    CHECK(!triangle.strong);
    REQUIRE(triangle.triples.size() == 1);
    CHECK(triangle.triples[0] == DelocalizingTriple{0, 0, 1, true});
    CHECK(!triangle.consistent);
    REQUIRE(triangle.witnesses.size() == 1);
    CHECK(triangle.witnesses[0].pivot == 0);
    CHECK(triangle.witnesses[0].pos_target == 0);
    CHECK(triangle.witnesses[0].neg_target == 1);
    CHECK(triangle.witnesses[0].positive_path ==
          std::vector<SignedArc>{SignedArc{0, 0, Sign::Positive}});
}

TEST_CASE("local-cycle checks honor the state cap")
{
    BooleanNetwork bn = parse_network("a, !b\nb, !a");
    SignedCycle cycle{{SignedArc{0, 1, Sign::Negative}, SignedArc{1, 0, Sign::Negative}}};
    CHECK_THROWS_AS(is_local_cycle(bn, cycle, 2), StateSpaceTooLargeError);
}

TEST_CASE("complete-digraph cycle counts match the closed form")
{
    // K_n has sum_{k=1..n} C(n,k)(k-1)! simple cycles; 2372 for n = 7.
    std::vector<std::string> names;
    std::vector<SignedArc> arcs;
    for (int v = 0; v < 7; ++v)
        names.push_back("v" + std::to_string(v));
    for (int u = 0; u < 7; ++u)
        for (int v = 0; v < 7; ++v)
            arcs.push_back(SignedArc{u, v, Sign::Positive});
    CycleEnumeration e = enumerate_cycles(SignedDigraph(std::move(names), std::move(arcs)));
    CHECK(!e.truncated);
    CHECK(e.cycles.size() == 2372);
}
