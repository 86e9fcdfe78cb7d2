#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crossgp/core/evolve.hpp"
#include "crossgp/core/individual.hpp"
#include "crossgp/core/parallel.hpp"
#include "crossgp/harness/config.hpp"

namespace crossgp::harness {

struct RunResult {
    std::uint64_t seed = 0;
    double best_cost = 0.0;
    bool success = false;
    std::size_t evaluations_used = 0;
    // Ordinal of the evaluation that produced the successful individual.
    std::optional<std::size_t> evaluations_to_success;
    std::string best_expression;
    std::vector<TrajectoryPoint> trajectory;
    // Not reproducible; excluded from determinism guarantees.
    double wall_ms = 0.0;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

struct Aggregates {
    double success_rate = 0.0;
    double median_best_cost = 0.0;
    // Over successful runs only; empty when none succeeded.
    std::optional<double> median_evaluations_to_success;
    double median_wall_ms = 0.0;

    friend bool operator==(const Aggregates&, const Aggregates&) = default;
};

struct BenchmarkReport {
    ExperimentSpec spec;
    std::vector<RunResult> runs;
    Aggregates aggregates;

    friend bool operator==(const BenchmarkReport&, const BenchmarkReport&) = default;
};

/// Middle value, or the mean of the two middle values. Requires a non-empty input.
double median(std::vector<double> values);

Aggregates aggregate(std::span<const RunResult> runs);

struct RunOptions {
    // Shared by runs and evaluations; nullptr runs everything sequentially.
    const WorkerPool* pool = nullptr;
    // May be called concurrently from different runs.
    std::function<void(std::uint64_t seed, const GenerationLog&)> on_generation;
};

/// One seeded run of the experiment's model on its problem.
RunResult run_single(const ExperimentSpec& spec, std::uint64_t seed, const RunOptions& options = {});

/// Runs seeds base_seed .. base_seed + repetitions - 1 and aggregates them.
/// Runs are ordered by seed whatever order they execute in.
BenchmarkReport run_experiment(const ExperimentSpec& spec, const RunOptions& options = {});

} // namespace crossgp::harness
