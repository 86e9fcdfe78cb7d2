#include "crossgp/policy/cartpole.hpp"

#include <algorithm>
#include <cmath>

namespace crossgp::policy {

std::vector<double> CartPole::reset(std::uint64_t seed)
{
    Rng rng = derive_rng(seed, 0);
    for (auto& v : state_) {
        v = rng.uniform(-reset_spread, reset_spread);
    }
    steps_ = 0;
    return {state_.begin(), state_.end()};
}

void CartPole::set_state(const std::array<double, 4>& state)
{
    state_ = state;
    steps_ = 0;
}

StepResult CartPole::step(const Action& action)
{
    const bool push_right = std::get<std::size_t>(action) == 1;
    auto [x, x_dot, theta, theta_dot] = state_;
    const double force = push_right ? force_magnitude : -force_magnitude;
    const double cos_theta = std::cos(theta);
    const double sin_theta = std::sin(theta);

    const double temp = (force + pole_mass_length * theta_dot * theta_dot * sin_theta) / total_mass;
    const double theta_acc = (gravity * sin_theta - cos_theta * temp) /
                             (half_length * (4.0 / 3.0 - pole_mass * cos_theta * cos_theta / total_mass));
    const double x_acc = temp - pole_mass_length * theta_acc * cos_theta / total_mass;

    x += dt * x_dot;
    x_dot += dt * x_acc;
    theta += dt * theta_dot;
    theta_dot += dt * theta_acc;
    state_ = {x, x_dot, theta, theta_dot};
    ++steps_;

    StepResult result;
    result.state.assign(state_.begin(), state_.end());
    result.reward = 1.0;
    result.terminated = std::fabs(x) > x_limit || std::fabs(theta) > theta_limit;
    result.truncated = !result.terminated && steps_ >= max_steps_;
    return result;
}

double CartPole::return_upper_bound(double gamma, std::size_t horizon) const
{
    const std::size_t steps = std::min(horizon, max_steps_);
    double bound = 0.0;
    double discount = 1.0;
    for (std::size_t t = 1; t <= steps; ++t) {
        discount *= gamma;
        bound += discount;
    }
    return bound;
}

} // namespace crossgp::policy
