#include "crossgp/core/hyperparameters.hpp"

#include <string>

#include "crossgp/core/error.hpp"

namespace crossgp {

std::string_view to_string(Scheme scheme) noexcept
{
    switch (scheme) {
    case Scheme::Generational:
        return "generational";
    case Scheme::OnePlusLambda:
        return "one_plus_lambda";
    }
    return "unknown";
}

Scheme parse_scheme(std::string_view text)
{
    if (text == "generational") {
        return Scheme::Generational;
    }
    if (text == "one_plus_lambda") {
        return Scheme::OnePlusLambda;
    }
    throw ConfigError("unknown scheme '" + std::string(text) + "' (valid: generational, one_plus_lambda)");
}

void Hyperparameters::validate() const
{
    auto fail = [](const std::string& what) { throw ConfigError("invalid hyperparameters: " + what); };
    if (population_size < 1) {
        fail("population_size must be >= 1");
    }
    if (max_evaluations < 1) {
        fail("max_evaluations must be >= 1");
    }
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
        fail("mutation_rate must be in [0, 1]");
    }
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
        fail("crossover_rate must be in [0, 1]");
    }
    if (tournament_size < 1 || tournament_size > population_size) {
        fail("tournament_size must be in [1, population_size]");
    }
    if (elitism > population_size) {
        fail("elitism must not exceed population_size");
    }
    if (mu < 1) {
        fail("mu must be >= 1");
    }
    if (lambda < 1) {
        fail("lambda must be >= 1");
    }
}

} // namespace crossgp
