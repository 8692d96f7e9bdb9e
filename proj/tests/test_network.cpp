#include "andnot/network.hpp"
#include "andnot/random_network.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace andnot;
using andnot::testing::three_node_example;

namespace {

UpdateFunction conj(std::vector<Literal> lits)
{
    return UpdateFunction::conjunction(std::move(lits));
}

} // namespace

TEST_CASE("parse the three-node example")
{
    BooleanNetwork bn = three_node_example();
    REQUIRE(bn.variable_count() == 3);
    CHECK(bn.names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(bn.function(0) == conj({{1, Sign::Negative}, {2, Sign::Positive}}));
    CHECK(bn.function(1) == conj({{0, Sign::Negative}, {2, Sign::Negative}}));
    CHECK(bn.function(2) == conj({{0, Sign::Negative}}));
}

TEST_CASE("parse a source variable")
{
    BooleanNetwork bn = parse_network("a, a");
    REQUIRE(bn.variable_count() == 1);
    CHECK(bn.is_source(0));
}

TEST_CASE("parse accepts comments, blank lines, and the bnet header")
{
    BooleanNetwork bn = parse_network("# comment\n"
                                      "targets, factors\n"
                                      "\n"
                                      "a , 1 \n"
                                      "b,  a\n");
    REQUIRE(bn.variable_count() == 2);
    CHECK(bn.function(0) == UpdateFunction::constant(true));
    CHECK(bn.function(1) == conj({{0, Sign::Positive}}));
}

TEST_CASE("parse errors carry their cause")
{
    auto code_of = [](const std::string& text) {
        try {
            parse_network(text);
        } catch (const ParseError& e) {
            return e.code();
        }
        FAIL("expected a parse error");
        return ParseError::Code::Syntax;
    };

    CHECK(code_of("a, b & !b\nb, a") == ParseError::Code::DuplicateLiteral);
    CHECK(code_of("a, a\na, 1") == ParseError::Code::DuplicateTarget);
    CHECK(code_of("a, b") == ParseError::Code::UnknownVariable);
    CHECK(code_of("") == ParseError::Code::EmptyNetwork);
    CHECK(code_of("# nothing\n\n") == ParseError::Code::EmptyNetwork);
    CHECK(code_of("a, b | c\nb, a\nc, a") == ParseError::Code::Syntax);
    CHECK(code_of("no comma here") == ParseError::Code::Syntax);
    CHECK(code_of("a,") == ParseError::Code::Syntax);
    CHECK(code_of("a, (b)\nb, a") == ParseError::Code::Syntax);
    CHECK(code_of("2x, 1") == ParseError::Code::Syntax);
}

TEST_CASE("serialize round-trips and renders constants")
{
    BooleanNetwork bn = three_node_example();
    CHECK(parse_network(serialize_network(bn)) == bn);

    BooleanNetwork constant = parse_network("a, 1\nb, 0");
    CHECK(serialize_network(constant) == "a, 1\nb, 0\n");
}

TEST_CASE("serialize/parse round-trip on random networks")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        GeneratorConfig config;
        config.variable_count = 1 + static_cast<int>(seed % 9);
        config.max_literals = std::min(3, config.variable_count);
        config.seed = seed;
        BooleanNetwork bn = generate_random(config);
        CHECK(parse_network(serialize_network(bn)) == bn);
    }
}

TEST_CASE("one-step percolation substitutes constants")
{
    SUBCASE("satisfied literal is dropped")
    {
        BooleanNetwork bn = parse_network("a, 1\nb, a & !c\nc, !b");
        CHECK(percolate_one_step(bn) == parse_network("a, 1\nb, !c\nc, !b"));
    }
    SUBCASE("falsified literal collapses the conjunction")
    {
        BooleanNetwork bn = parse_network("a, 0\nb, a & !c\nc, c");
        CHECK(percolate_one_step(bn) == parse_network("a, 0\nb, 0\nc, c"));
    }
    SUBCASE("no constants, no change")
    {
        BooleanNetwork bn = three_node_example();
        CHECK(percolate_one_step(bn) == bn);
    }
    SUBCASE("conjunction with every literal satisfied becomes 1")
    {
        BooleanNetwork bn = parse_network("a, 1\nb, a");
        CHECK(percolate_one_step(bn) == parse_network("a, 1\nb, 1"));
    }
}

TEST_CASE("full percolation reaches the stable network")
{
    BooleanNetwork bn = parse_network("a, 1\nb, a\nc, b & !d\nd, d");
    BooleanNetwork expected = parse_network("a, 1\nb, 1\nc, !d\nd, d");
    CHECK(percolate_full(bn) == expected);

    SUBCASE("idempotent on its own result")
    {
        CHECK(percolate_full(expected) == expected);
        CHECK(percolate_one_step(expected) == expected);
    }
    SUBCASE("all-constant network unchanged")
    {
        BooleanNetwork constants = parse_network("a, 0\nb, 1");
        CHECK(percolate_full(constants) == constants);
    }
}

TEST_CASE("percolation grows the constant count monotonically")
{
    auto constant_count = [](const BooleanNetwork& bn) {
        int k = 0;
        for (int v = 0; v < bn.variable_count(); ++v)
            if (bn.function(v).is_constant())
                ++k;
        return k;
    };

    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        GeneratorConfig config;
        config.variable_count = 7;
        config.constant_probability = 0.3;
        config.seed = seed;
        BooleanNetwork current = generate_random(config);

        int steps = 0;
        while (true) {
            BooleanNetwork next = percolate_one_step(current);
            CHECK(constant_count(next) >= constant_count(current));
            if (next == current)
                break;
            // A changing step that creates no constant only drops satisfied
            // literals, which makes the very next step a no-op.
            if (!(percolate_one_step(next) == next))
                CHECK(constant_count(next) > constant_count(current));
            current = std::move(next);
            ++steps;
        }
        CHECK(steps <= config.variable_count);
        CHECK(percolate_full(generate_random(config)) == current);
    }
}

TEST_CASE("make_source replaces exactly the requested functions")
{
    BooleanNetwork bn = three_node_example();

    BooleanNetwork g = make_source(bn, {0});
    CHECK(g.is_source(0));
    CHECK(g.function(1) == bn.function(1));
    CHECK(g.function(2) == bn.function(2));
    CHECK(g.names() == bn.names());

    CHECK(make_source(bn, {}) == bn);

    BooleanNetwork all = make_source(bn, {0, 1, 2});
    for (int v = 0; v < 3; ++v)
        CHECK(all.is_source(v));
}

TEST_CASE("pin_assignment replaces exactly the pinned functions")
{
    BooleanNetwork bn = three_node_example();

    BooleanNetwork g = pin_assignment(bn, {{0, true}});
    CHECK(g.function(0) == UpdateFunction::constant(true));
    CHECK(g.function(1) == bn.function(1));
    CHECK(g.function(2) == bn.function(2));

    CHECK(pin_assignment(bn, {}) == bn);

    BooleanNetwork all = pin_assignment(bn, {{0, false}, {1, true}, {2, false}});
    for (int v = 0; v < 3; ++v)
        CHECK(all.function(v).is_constant());

    CHECK_THROWS_AS(pin_assignment(bn, {{0, true}, {0, false}}), std::invalid_argument);
}

TEST_CASE("update function construction rejects bad shapes")
{
    CHECK_THROWS_AS(UpdateFunction::conjunction({}), std::invalid_argument);
    CHECK_THROWS_AS(
        UpdateFunction::conjunction({{0, Sign::Positive}, {0, Sign::Negative}}),
        std::invalid_argument);
}

TEST_CASE("state formatting follows variable order")
{
    CHECK(format_state(0, 3) == "000");
    CHECK(format_state(1, 3) == "100"); // bit 0 is the first variable
    CHECK(format_state(6, 4) == "0110");
}
