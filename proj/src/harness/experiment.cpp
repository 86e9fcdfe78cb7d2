#include "crossgp/harness/experiment.hpp"

#include <algorithm>
#include <chrono>

#include "crossgp/core/error.hpp"
#include "models.hpp"

namespace crossgp::harness {

namespace {

template <class G>
RunResult run_model(const Model<G>& model, const Problem& problem, const ExperimentSpec& spec, std::uint64_t seed,
                    const RunOptions& options)
{
    Hyperparameters hp = spec.hyperparameters;
    hp.seed = seed;
    EvolveOptions evolve_options;
    evolve_options.pool = options.pool;
    if (options.on_generation) {
        evolve_options.on_generation = [&](const GenerationLog& log) { options.on_generation(seed, log); };
    }
    const auto res = evolve(model, problem, hp, spec.scheme, evolve_options);

    RunResult out;
    out.seed = seed;
    out.best_cost = res.best.cost();
    out.success = res.success;
    out.evaluations_used = res.evaluations_used;
    if (res.success) {
        out.evaluations_to_success = res.best.fitness->evaluations_used;
    }
    out.best_expression = model.to_expression(res.best.genome);
    out.trajectory = res.trajectory;
    return out;
}

RunResult run_resolved(const detail::BuiltModel& model, const Problem& problem, const ExperimentSpec& spec,
                       std::uint64_t seed, const RunOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    RunResult out = model.tgp ? run_model(*model.tgp, problem, spec, seed, options)
                              : run_model(*model.cgp, problem, spec, seed, options);
    out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

} // namespace

double median(std::vector<double> values)
{
    if (values.empty()) {
        throw std::invalid_argument("median of an empty sequence");
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

Aggregates aggregate(std::span<const RunResult> runs)
{
    Aggregates agg;
    if (runs.empty()) {
        return agg;
    }
    std::vector<double> costs;
    std::vector<double> walls;
    std::vector<double> to_success;
    std::size_t successes = 0;
    for (const auto& r : runs) {
        costs.push_back(r.best_cost);
        walls.push_back(r.wall_ms);
        if (r.success) {
            ++successes;
            to_success.push_back(static_cast<double>(r.evaluations_to_success.value_or(r.evaluations_used)));
        }
    }
    agg.success_rate = static_cast<double>(successes) / static_cast<double>(runs.size());
    agg.median_best_cost = median(costs);
    if (!to_success.empty()) {
        agg.median_evaluations_to_success = median(to_success);
    }
    agg.median_wall_ms = median(walls);
    return agg;
}

RunResult run_single(const ExperimentSpec& spec, std::uint64_t seed, const RunOptions& options)
{
    const auto resolved = resolve_problem(spec.problem, spec.problem_params);
    const auto model = detail::build_model(spec.model, spec.model_params, *resolved.problem);
    return run_resolved(model, *resolved.problem, spec, seed, options);
}

BenchmarkReport run_experiment(const ExperimentSpec& spec, const RunOptions& options)
{
    if (spec.repetitions < 1) {
        throw ConfigError("repetitions must be >= 1");
    }
    const auto resolved = resolve_problem(spec.problem, spec.problem_params);
    const auto model = detail::build_model(spec.model, spec.model_params, *resolved.problem);

    BenchmarkReport report;
    report.spec = spec;
    report.runs.resize(spec.repetitions);
    auto body = [&](std::size_t i) {
        report.runs[i] = run_resolved(model, *resolved.problem, spec, spec.base_seed + i, options);
    };
    if (options.pool != nullptr && options.pool->workers() > 1) {
        options.pool->parallel_for(spec.repetitions, body);
    } else {
        for (std::size_t i = 0; i < spec.repetitions; ++i) {
            body(i);
        }
    }
    report.aggregates = aggregate(report.runs);
    return report;
}

} // namespace crossgp::harness
