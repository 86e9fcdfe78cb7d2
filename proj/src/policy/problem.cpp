#include "crossgp/policy/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crossgp/core/error.hpp"

namespace crossgp::policy {

void EpisodeConfig::validate() const
{
    if (episodes < 1) {
        throw ConfigError("episodes must be >= 1");
    }
    if (!(gamma > 0.0 && gamma <= 1.0)) {
        throw ConfigError("gamma must be in (0, 1]");
    }
    if (max_steps < 1) {
        throw ConfigError("max_steps must be >= 1");
    }
}

Action decode_action(std::span<const double> outputs, const ActionSpace& space)
{
    if (space.kind == ActionSpace::Kind::Continuous1D) {
        const double v = outputs[0];
        return std::isnan(v) ? space.lo : std::clamp(v, space.lo, space.hi);
    }
    if (space.n == 2 && outputs.size() == 1) {
        return std::size_t{outputs[0] > 0.0 ? 1U : 0U};
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < space.n && i < outputs.size(); ++i) {
        if (outputs[i] > outputs[best]) {
            best = i;
        }
    }
    return best;
}

Agent::Agent(const Program& program, ActionSpace space)
    : program_(program)
    , space_(space)
    , outputs_(program.n_outputs())
{
    if (program.n_outputs() < space_.program_outputs()) {
        throw ConfigError("program has too few outputs for the action space");
    }
}

std::optional<Action> Agent::act(std::span<const double> state) const
{
    program_.evaluate_into(state, outputs_);
    const std::size_t used = space_.kind == ActionSpace::Kind::Discrete ? std::min(space_.n, outputs_.size()) : 1;
    for (std::size_t i = 0; i < used; ++i) {
        if (std::isnan(outputs_[i])) {
            return std::nullopt;
        }
    }
    return decode_action(outputs_, space_);
}

double rollout(const Agent& agent, Environment& env, const EpisodeConfig& cfg)
{
    cfg.validate();
    double total = 0.0;
    for (std::size_t e = 0; e < cfg.episodes; ++e) {
        std::vector<double> state = env.reset(cfg.base_seed + e);
        double episode_return = 0.0;
        double discount = 1.0;
        for (std::size_t t = 1; t <= cfg.max_steps; ++t) {
            const auto action = agent.act(state);
            if (!action) {
                break;
            }
            StepResult step = env.step(*action);
            discount *= cfg.gamma;
            episode_return += discount * step.reward;
            if (step.terminated || step.truncated) {
                break;
            }
            state = std::move(step.state);
        }
        total += episode_return;
    }
    return total / static_cast<double>(cfg.episodes);
}

PolicyProblem::PolicyProblem(std::string name, EnvironmentFactory factory, EpisodeConfig episodes,
                             std::optional<double> target_return)
    : name_(std::move(name))
    , factory_(std::move(factory))
    , episodes_(episodes)
    , target_(target_return)
{
    episodes_.validate();
    const auto env = factory_();
    state_dim_ = env->state_dim();
    space_ = env->action_space();
    upper_bound_ = env->return_upper_bound(episodes_.gamma, episodes_.max_steps);
}

double PolicyProblem::mean_return(const Program& program) const
{
    if (program.n_inputs() != state_dim_) {
        throw ConfigError("policy program inputs do not match the state dimension");
    }
    const auto env = factory_();
    const Agent agent(program, space_);
    return rollout(agent, *env, episodes_);
}

double PolicyProblem::cost(const Program& program, Rng& /*rng*/) const
{
    const double ret = mean_return(program);
    const double reference = target_ ? *target_ : upper_bound_;
    return std::max(0.0, reference - ret);
}

double PolicyProblem::ideal_threshold() const
{
    return target_ ? 0.0 : -std::numeric_limits<double>::infinity();
}

double fitness_policy(const Program& program, const PolicyProblem& problem)
{
    Rng unused;
    return problem.cost(program, unused);
}

} // namespace crossgp::policy
