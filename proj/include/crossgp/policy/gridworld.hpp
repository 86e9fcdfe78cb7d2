#pragma once

#include <cstddef>

#include "crossgp/policy/environment.hpp"

namespace crossgp::policy {

struct Cell {
    std::size_t x = 0;
    std::size_t y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

struct GridworldConfig {
    std::size_t width = 5;
    std::size_t height = 5;
    Cell goal{4, 4};
    Cell start{0, 0};
    double step_reward = -1.0;
    double goal_reward = 0.0;
    // 0 selects 4 * (width + height).
    std::size_t max_steps = 0;
};

/// Deterministic grid navigation. State is (x / (width-1), y / (height-1));
/// actions 0..3 move up (y+1), down (y-1), left (x-1), right (x+1), clipped at
/// the walls. Every move earns step_reward; the move that lands on the goal
/// additionally earns goal_reward and ends the episode.
class Gridworld final : public Environment {
public:
    static constexpr std::size_t up = 0;
    static constexpr std::size_t down = 1;
    static constexpr std::size_t left = 2;
    static constexpr std::size_t right = 3;

    explicit Gridworld(GridworldConfig cfg = {});

    std::string name() const override;
    std::size_t state_dim() const override { return 2; }
    ActionSpace action_space() const override { return ActionSpace::discrete(4); }
    std::size_t max_steps() const override { return cfg_.max_steps; }

    std::vector<double> reset(std::uint64_t seed) override;
    StepResult step(const Action& action) override;
    double return_upper_bound(double gamma, std::size_t horizon) const override;

    /// Discounted return of a shortest path to the goal; the best achievable
    /// return when step_reward <= 0 <= goal_reward.
    double shortest_path_return(double gamma) const;

    const GridworldConfig& config() const noexcept { return cfg_; }
    Cell position() const noexcept { return pos_; }

private:
    std::vector<double> observe() const;

    GridworldConfig cfg_;
    Cell pos_{};
    std::size_t steps_ = 0;
};

} // namespace crossgp::policy
