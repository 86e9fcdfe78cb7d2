#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

#include "crossgp/core/error.hpp"
#include "crossgp/core/individual.hpp"
#include "crossgp/core/rng.hpp"

namespace crossgp {

/// Index of the lowest-cost individual among `candidates`; ties go to the
/// lowest population index.
template <class G>
std::size_t best_of(std::span<const Individual<G>> population, std::span<const std::size_t> candidates)
{
    if (candidates.empty()) {
        throw std::logic_error("best_of: no candidates");
    }
    std::size_t best = candidates.front();
    for (std::size_t idx : candidates) {
        const auto& fit = population[idx].fitness;
        if (!fit) {
            throw std::logic_error("selection over an unevaluated individual");
        }
        const double cost = fit->cost;
        const double best_cost = population[best].cost();
        if (cost < best_cost || (cost == best_cost && idx < best)) {
            best = idx;
        }
    }
    return best;
}

/// Tournament of size k, sampled without replacement. Returns a population index.
template <class G>
std::size_t tournament_select(std::span<const Individual<G>> population, std::size_t k, Rng& rng)
{
    if (population.empty() || k == 0 || k > population.size()) {
        throw ConfigError("tournament size must be in [1, population size]");
    }
    const auto sampled = sample_without_replacement(population.size(), k, rng);
    return best_of(population, std::span<const std::size_t>(sampled));
}

} // namespace crossgp
