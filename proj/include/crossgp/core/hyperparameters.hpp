#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace crossgp {

enum class Scheme { Generational, OnePlusLambda };

std::string_view to_string(Scheme scheme) noexcept;
/// Accepts "generational" and "one_plus_lambda". Throws ConfigError otherwise.
Scheme parse_scheme(std::string_view text);

struct Hyperparameters {
    std::size_t population_size = 100;
    std::size_t max_evaluations = 100000;
    double mutation_rate = 0.1;
    double crossover_rate = 0.9;
    std::size_t tournament_size = 4;
    std::size_t elitism = 1;
    std::size_t mu = 1;
    std::size_t lambda = 4;
    std::uint64_t seed = 42;

    /// Throws ConfigError naming the first violated constraint.
    void validate() const;

    friend bool operator==(const Hyperparameters&, const Hyperparameters&) = default;
};

} // namespace crossgp
