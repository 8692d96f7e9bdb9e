#pragma once

#include "andnot/network.hpp"

#include <cstdint>
#include <random>

namespace andnot {

/// Deterministic RNG wrapper: all draws go through hand-rolled mappings of
/// raw mt19937_64 output, so identical seeds give identical sequences on
/// every platform (std distributions do not guarantee that).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform value in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return engine_() % bound; }

    int next_int(int lo, int hi) // inclusive range
    {
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    double next_double() // [0, 1)
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_double() < p; }

private:
    std::mt19937_64 engine_;
};

struct GeneratorConfig {
    int variable_count = 0;
    int min_literals = 1;
    int max_literals = 3;
    double negative_probability = 0.5;
    double constant_probability = 0.1;
    std::uint64_t seed = 0;
};

/// Each variable independently becomes a constant (0/1 equiprobable) with
/// constant_probability, and otherwise a conjunction of k distinct
/// uniformly chosen variables, k uniform in [min_literals, max_literals],
/// each literal negated with negative_probability. Deterministic in the
/// seed. Throws std::invalid_argument on a malformed config.
BooleanNetwork generate_random(const GeneratorConfig& config);

} // namespace andnot
