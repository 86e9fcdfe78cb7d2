#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "crossgp/core/problem.hpp"
#include "crossgp/core/program.hpp"
#include "crossgp/policy/environment.hpp"

namespace crossgp::policy {

struct EpisodeConfig {
    std::size_t episodes = 10;
    double gamma = 1.0;
    std::size_t max_steps = 200;
    std::uint64_t base_seed = 0;

    void validate() const;
};

/// Deterministic action for a program output vector:
///   Discrete(2) with one output: output > 0 selects action 1.
///   Discrete(n): argmax over the first n outputs, ties to the lowest index.
///   Continuous1D: first output clamped to [lo, hi] (NaN maps to lo).
Action decode_action(std::span<const double> outputs, const ActionSpace& space);

/// A candidate policy: an evolved program plus the rule turning its outputs
/// into actions.
class Agent {
public:
    Agent(const Program& program, ActionSpace space);

    /// nullopt when a decoded output is NaN (the episode must stop).
    std::optional<Action> act(std::span<const double> state) const;

    const ActionSpace& action_space() const noexcept { return space_; }

private:
    const Program& program_;
    ActionSpace space_;
    mutable std::vector<double> outputs_;
};

/// Mean over episodes of sum_t gamma^t r_t, with the first reward at t = 1.
/// Episode e starts from reset(base_seed + e) and lasts at most max_steps.
double rollout(const Agent& agent, Environment& env, const EpisodeConfig& cfg);

/// Policy search: cost = max(0, target_return - mean return) when a target is
/// set, else max(0, R_max - mean return) with R_max the environment's return
/// upper bound for the configured horizon.
class PolicyProblem final : public Problem {
public:
    PolicyProblem(std::string name, EnvironmentFactory factory, EpisodeConfig episodes,
                  std::optional<double> target_return);

    std::string name() const override { return name_; }
    Domain domain() const override { return Domain::Real; }
    std::size_t n_inputs() const override { return state_dim_; }
    std::size_t n_outputs() const override { return space_.program_outputs(); }
    double cost(const Program& program, Rng& rng) const override;
    /// 0 with a target (return >= target); otherwise never ideal.
    double ideal_threshold() const override;

    double mean_return(const Program& program) const;
    double return_upper_bound() const noexcept { return upper_bound_; }
    const std::optional<double>& target_return() const noexcept { return target_; }
    const EpisodeConfig& episodes() const noexcept { return episodes_; }
    const ActionSpace& action_space() const noexcept { return space_; }

private:
    std::string name_;
    EnvironmentFactory factory_;
    EpisodeConfig episodes_;
    std::optional<double> target_;
    std::size_t state_dim_ = 0;
    ActionSpace space_;
    double upper_bound_ = 0.0;
};

double fitness_policy(const Program& program, const PolicyProblem& problem);

} // namespace crossgp::policy
