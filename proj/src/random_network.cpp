#include "andnot/random_network.hpp"

#include <numeric>
#include <stdexcept>

namespace andnot {

BooleanNetwork generate_random(const GeneratorConfig& config)
{
    int n = config.variable_count;
    if (n < 1)
        throw std::invalid_argument("generator: variable count must be positive");
    if (config.min_literals < 1 || config.min_literals > config.max_literals ||
        config.max_literals > n)
        throw std::invalid_argument("generator: need 1 <= min_literals <= max_literals <= n");
    if (config.negative_probability < 0.0 || config.negative_probability > 1.0 ||
        config.constant_probability < 0.0 || config.constant_probability > 1.0)
        throw std::invalid_argument("generator: probabilities must lie in [0, 1]");

    SeededRng rng(config.seed);
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        names.push_back("x" + std::to_string(v));

    std::vector<UpdateFunction> functions;
    functions.reserve(static_cast<std::size_t>(n));
    std::vector<int> scratch(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (rng.bernoulli(config.constant_probability)) {
            functions.push_back(UpdateFunction::constant(rng.bernoulli(0.5)));
            continue;
        }
        int k = rng.next_int(config.min_literals, config.max_literals);
        std::iota(scratch.begin(), scratch.end(), 0);
        std::vector<Literal> literals;
        literals.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            // partial Fisher-Yates keeps the k picks distinct
            int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
            std::swap(scratch[i], scratch[j]);
            Sign sign = rng.bernoulli(config.negative_probability) ? Sign::Negative
                                                                   : Sign::Positive;
            literals.push_back(Literal{scratch[i], sign});
        }
        functions.push_back(UpdateFunction::conjunction(std::move(literals)));
    }
    return BooleanNetwork(std::move(names), std::move(functions));
}

} // namespace andnot
