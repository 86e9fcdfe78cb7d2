#include "crossgp/policy/gridworld.hpp"

#include <algorithm>

#include "crossgp/core/error.hpp"

namespace crossgp::policy {

Gridworld::Gridworld(GridworldConfig cfg) : cfg_(cfg)
{
    if (cfg_.width < 1 || cfg_.height < 1) {
        throw ConfigError("gridworld needs a positive width and height");
    }
    if (cfg_.goal.x >= cfg_.width || cfg_.goal.y >= cfg_.height) {
        throw ConfigError("gridworld goal lies outside the grid");
    }
    if (cfg_.start.x >= cfg_.width || cfg_.start.y >= cfg_.height) {
        throw ConfigError("gridworld start lies outside the grid");
    }
    if (cfg_.start == cfg_.goal) {
        throw ConfigError("gridworld start and goal coincide");
    }
    if (cfg_.max_steps == 0) {
        cfg_.max_steps = 4 * (cfg_.width + cfg_.height);
    }
    pos_ = cfg_.start;
}

std::string Gridworld::name() const
{
    return "gridworld:" + std::to_string(cfg_.width) + "x" + std::to_string(cfg_.height) + ":" +
           std::to_string(cfg_.goal.x) + "," + std::to_string(cfg_.goal.y);
}

std::vector<double> Gridworld::observe() const
{
    const double sx = cfg_.width > 1 ? static_cast<double>(cfg_.width - 1) : 1.0;
    const double sy = cfg_.height > 1 ? static_cast<double>(cfg_.height - 1) : 1.0;
    return {static_cast<double>(pos_.x) / sx, static_cast<double>(pos_.y) / sy};
}

std::vector<double> Gridworld::reset(std::uint64_t /*seed*/)
{
    pos_ = cfg_.start;
    steps_ = 0;
    return observe();
}

StepResult Gridworld::step(const Action& action)
{
    switch (std::get<std::size_t>(action)) {
    case up:
        pos_.y = std::min(pos_.y + 1, cfg_.height - 1);
        break;
    case down:
        pos_.y = pos_.y > 0 ? pos_.y - 1 : 0;
        break;
    case left:
        pos_.x = pos_.x > 0 ? pos_.x - 1 : 0;
        break;
    case right:
        pos_.x = std::min(pos_.x + 1, cfg_.width - 1);
        break;
    default:
        break;
    }
    ++steps_;
    StepResult result;
    result.state = observe();
    result.terminated = pos_ == cfg_.goal;
    result.reward = cfg_.step_reward + (result.terminated ? cfg_.goal_reward : 0.0);
    result.truncated = !result.terminated && steps_ >= cfg_.max_steps;
    return result;
}

double Gridworld::return_upper_bound(double gamma, std::size_t horizon) const
{
    const std::size_t steps = std::min(horizon, cfg_.max_steps);
    double bound = 0.0;
    double discount = 1.0;
    for (std::size_t t = 1; t <= steps; ++t) {
        discount *= gamma;
        bound += discount * std::max(cfg_.step_reward, 0.0);
    }
    return bound + std::max(cfg_.goal_reward, 0.0);
}

double Gridworld::shortest_path_return(double gamma) const
{
    const auto dist = [](std::size_t a, std::size_t b) { return a > b ? a - b : b - a; };
    const std::size_t d = dist(cfg_.start.x, cfg_.goal.x) + dist(cfg_.start.y, cfg_.goal.y);
    double ret = 0.0;
    double discount = 1.0;
    for (std::size_t t = 1; t <= d; ++t) {
        discount *= gamma;
        ret += discount * cfg_.step_reward;
    }
    return ret + discount * cfg_.goal_reward;
}

} // namespace crossgp::policy
