#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "crossgp/core/error.hpp"
#include "crossgp/core/hyperparameters.hpp"
#include "crossgp/core/individual.hpp"
#include "crossgp/core/model.hpp"
#include "crossgp/core/parallel.hpp"
#include "crossgp/core/problem.hpp"
#include "crossgp/core/rng.hpp"
#include "crossgp/core/selection.hpp"

namespace crossgp {

struct GenerationLog {
    std::size_t generation = 0;
    std::size_t evaluations = 0;
    double best_cost = 0.0;
};

struct EvolveOptions {
    // nullptr evaluates sequentially.
    const WorkerPool* pool = nullptr;
    std::function<void(const GenerationLog&)> on_generation;
};

template <class G>
struct EvolutionResult {
    Individual<G> best;
    bool success = false;
    std::size_t evaluations_used = 0;
    std::size_t generations = 0;
    // Best cost of the current population, recorded at generation 0, at every
    // generation where it changes, and at the final generation.
    std::vector<TrajectoryPoint> trajectory;
};

/// Per-individual evaluation stream. Stream 0 is reserved for breeding.
inline Rng evaluation_rng(std::uint64_t seed, std::size_t generation, std::size_t index) noexcept
{
    return derive_rng(seed, (static_cast<std::uint64_t>(generation) + 1) << 32 | static_cast<std::uint32_t>(index));
}

namespace detail {

template <class G>
void evaluate_all(const Model<G>& model, const Problem& problem, std::span<Individual<G>> individuals,
                  std::uint64_t seed, std::size_t generation, std::size_t evaluations_before,
                  const WorkerPool* pool)
{
    auto body = [&](std::size_t i) {
        Rng rng = evaluation_rng(seed, generation, i);
        const auto program = model.decode(individuals[i].genome);
        individuals[i].fitness = Fitness{problem.cost(*program, rng), evaluations_before + i + 1};
    };
    if (pool != nullptr && pool->workers() > 1) {
        pool->parallel_for(individuals.size(), body);
    } else {
        for (std::size_t i = 0; i < individuals.size(); ++i) {
            body(i);
        }
    }
}

class TrajectoryRecorder {
public:
    void record(std::size_t generation, double best_cost)
    {
        if (points_.empty() || points_.back().best_cost != best_cost) {
            points_.push_back({generation, best_cost});
            pending_ = false;
        } else {
            last_ = {generation, best_cost};
            pending_ = true;
        }
    }

    std::vector<TrajectoryPoint> finish()
    {
        if (pending_) {
            points_.push_back(last_);
        }
        return std::move(points_);
    }

private:
    std::vector<TrajectoryPoint> points_;
    TrajectoryPoint last_;
    bool pending_ = false;
};

template <class G>
std::size_t best_index(std::span<const Individual<G>> population)
{
    std::vector<std::size_t> all(population.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return best_of(population, std::span<const std::size_t>(all));
}

template <class G>
void check_compatible(const Model<G>& model, const Problem& problem)
{
    if (model.domain() != problem.domain()) {
        throw ConfigError("model '" + model.name() + "' works in the " + std::string(to_string(model.domain())) +
                          " domain but problem '" + problem.name() + "' is " +
                          std::string(to_string(problem.domain())));
    }
    if (model.n_inputs() != problem.n_inputs() || model.n_outputs() != problem.n_outputs()) {
        throw ConfigError("model shape (" + std::to_string(model.n_inputs()) + " inputs, " +
                          std::to_string(model.n_outputs()) + " outputs) does not match problem '" + problem.name() +
                          "' (" + std::to_string(problem.n_inputs()) + " inputs, " +
                          std::to_string(problem.n_outputs()) + " outputs)");
    }
}

template <class G>
EvolutionResult<G> evolve_generational(const Model<G>& model, const Problem& problem, const Hyperparameters& hp,
                                       const EvolveOptions& options)
{
    Rng rng = derive_rng(hp.seed, 0);
    const VariationRates rates{hp.crossover_rate, hp.mutation_rate};

    std::vector<Individual<G>> population;
    population.reserve(hp.population_size);
    for (auto& genome : model.initialize(hp.population_size, rng)) {
        population.push_back({std::move(genome), std::nullopt});
    }

    EvolutionResult<G> result;
    TrajectoryRecorder trajectory;
    std::size_t generation = 0;
    std::size_t evaluations = 0;
    evaluate_all<G>(model, problem, population, hp.seed, generation, evaluations, options.pool);
    evaluations += population.size();

    std::optional<Individual<G>> best;
    for (;;) {
        const std::size_t gen_best = best_index<G>(population);
        const double gen_best_cost = population[gen_best].cost();
        if (!best || gen_best_cost < best->cost()) {
            best = population[gen_best];
        }
        trajectory.record(generation, gen_best_cost);
        if (options.on_generation) {
            options.on_generation({generation, evaluations, best->cost()});
        }
        if (problem.is_ideal(best->cost())) {
            result.success = true;
            break;
        }
        // Elites filling the whole population leave no room for children.
        if (evaluations >= hp.max_evaluations || hp.elitism >= hp.population_size) {
            break;
        }

        std::vector<std::size_t> order(population.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return population[a].cost() < population[b].cost();
        });

        std::vector<Individual<G>> next;
        next.reserve(hp.population_size);
        for (std::size_t e = 0; e < hp.elitism; ++e) {
            next.push_back(population[order[e]]);
        }
        const std::size_t first_child = next.size();
        const std::span<const Individual<G>> view(population);
        while (next.size() < hp.population_size) {
            const std::size_t a = tournament_select(view, hp.tournament_size, rng);
            const std::size_t b = tournament_select(view, hp.tournament_size, rng);
            next.push_back({model.breed(population[a].genome, population[b].genome, rates, rng), std::nullopt});
        }

        ++generation;
        const std::span<Individual<G>> children(next.begin() + static_cast<std::ptrdiff_t>(first_child), next.end());
        evaluate_all<G>(model, problem, children, hp.seed, generation, evaluations, options.pool);
        evaluations += children.size();
        population = std::move(next);
    }

    result.best = std::move(*best);
    result.evaluations_used = evaluations;
    result.generations = generation + 1;
    result.trajectory = trajectory.finish();
    return result;
}

// (mu + lambda): offspring are ranked ahead of parents, so an offspring that
// ties its parent replaces it (neutral drift).
template <class G>
EvolutionResult<G> evolve_plus_lambda(const Model<G>& model, const Problem& problem, const Hyperparameters& hp,
                                      const EvolveOptions& options)
{
    Rng rng = derive_rng(hp.seed, 0);

    std::vector<Individual<G>> parents;
    for (auto& genome : model.initialize(hp.mu, rng)) {
        parents.push_back({std::move(genome), std::nullopt});
    }

    EvolutionResult<G> result;
    TrajectoryRecorder trajectory;
    std::size_t generation = 0;
    std::size_t evaluations = 0;
    evaluate_all<G>(model, problem, parents, hp.seed, generation, evaluations, options.pool);
    evaluations += parents.size();

    auto by_cost = [](const Individual<G>& a, const Individual<G>& b) { return a.cost() < b.cost(); };
    std::stable_sort(parents.begin(), parents.end(), by_cost);

    for (;;) {
        const double best_cost = parents.front().cost();
        trajectory.record(generation, best_cost);
        if (options.on_generation) {
            options.on_generation({generation, evaluations, best_cost});
        }
        if (problem.is_ideal(best_cost)) {
            result.success = true;
            break;
        }
        if (evaluations >= hp.max_evaluations) {
            break;
        }

        std::vector<Individual<G>> pool;
        pool.reserve(hp.lambda + hp.mu);
        for (std::size_t j = 0; j < hp.lambda; ++j) {
            const auto& parent = hp.mu == 1 ? parents.front() : parents[rng.below(hp.mu)];
            pool.push_back({model.mutate(parent.genome, hp.mutation_rate, rng), std::nullopt});
        }
        ++generation;
        evaluate_all<G>(model, problem, std::span<Individual<G>>(pool), hp.seed, generation, evaluations,
                        options.pool);
        evaluations += pool.size();

        for (auto& parent : parents) {
            pool.push_back(std::move(parent));
        }
        std::stable_sort(pool.begin(), pool.end(), by_cost);
        pool.resize(hp.mu);
        parents = std::move(pool);
    }

    result.best = parents.front();
    result.evaluations_used = evaluations;
    result.generations = generation + 1;
    result.trajectory = trajectory.finish();
    return result;
}

} // namespace detail

/// Runs one seeded evolutionary search.
///
/// Whole generations are evaluated, so the budget may be overshot by at most
/// one generation (population_size for Generational, lambda for
/// OnePlusLambda). The search stops early once the best cost reaches the
/// problem's ideal threshold. Results depend only on (model, problem, hp,
/// scheme); the worker count in `options` never changes them.
template <class G>
EvolutionResult<G> evolve(const Model<G>& model, const Problem& problem, const Hyperparameters& hp, Scheme scheme,
                          const EvolveOptions& options = {})
{
    hp.validate();
    detail::check_compatible(model, problem);
    switch (scheme) {
    case Scheme::Generational:
        return detail::evolve_generational(model, problem, hp, options);
    case Scheme::OnePlusLambda:
        return detail::evolve_plus_lambda(model, problem, hp, options);
    }
    throw ConfigError("unknown evolution scheme");
}

} // namespace crossgp
