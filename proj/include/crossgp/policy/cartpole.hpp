#pragma once

#include <array>
#include <numbers>

#include "crossgp/core/rng.hpp"
#include "crossgp/policy/environment.hpp"

namespace crossgp::policy {

/// Classic cart-pole balancing with explicit Euler integration.
/// State (x, x_dot, theta, theta_dot); action 0 pushes left, 1 pushes right.
/// Every step, including the one that ends the episode, earns +1.
class CartPole final : public Environment {
public:
    static constexpr double gravity = 9.8;
    static constexpr double cart_mass = 1.0;
    static constexpr double pole_mass = 0.1;
    static constexpr double total_mass = cart_mass + pole_mass;
    static constexpr double half_length = 0.5;
    static constexpr double pole_mass_length = pole_mass * half_length;
    static constexpr double force_magnitude = 10.0;
    static constexpr double dt = 0.02;
    static constexpr double theta_limit = 12.0 * 2.0 * std::numbers::pi / 360.0;
    static constexpr double x_limit = 2.4;
    static constexpr double reset_spread = 0.05;
    static constexpr std::size_t default_max_steps = 200;

    explicit CartPole(std::size_t max_steps = default_max_steps) : max_steps_(max_steps) {}

    std::string name() const override { return "cartpole"; }
    std::size_t state_dim() const override { return 4; }
    ActionSpace action_space() const override { return ActionSpace::discrete(2); }
    std::size_t max_steps() const override { return max_steps_; }

    std::vector<double> reset(std::uint64_t seed) override;
    StepResult step(const Action& action) override;
    double return_upper_bound(double gamma, std::size_t horizon) const override;

    /// Starts from an explicit state (used by tests and analysis tools).
    void set_state(const std::array<double, 4>& state);

private:
    std::size_t max_steps_;
    std::size_t steps_ = 0;
    std::array<double, 4> state_{};
};

} // namespace crossgp::policy
