#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace crossgp::policy {

/// Discrete actions are indices; continuous actions are scalars.
using Action = std::variant<std::size_t, double>;

struct ActionSpace {
    enum class Kind { Discrete, Continuous1D };

    Kind kind = Kind::Discrete;
    std::size_t n = 2;
    double lo = 0.0;
    double hi = 0.0;

    static ActionSpace discrete(std::size_t n) { return {Kind::Discrete, n, 0.0, 0.0}; }
    static ActionSpace continuous(double lo, double hi) { return {Kind::Continuous1D, 0, lo, hi}; }

    bool contains(const Action& action) const;
    /// Program outputs needed by decode_action: 1 for Discrete(2) and
    /// Continuous1D, n for Discrete(n > 2).
    std::size_t program_outputs() const noexcept;

    friend bool operator==(const ActionSpace&, const ActionSpace&) = default;
};

struct StepResult {
    std::vector<double> state;
    double reward = 0.0;
    bool terminated = false;
    bool truncated = false;
};

/// Episodic MDP. Transitions are deterministic; randomness enters only
/// through the seeded initial-state draw in reset().
class Environment {
public:
    virtual ~Environment() = default;

    virtual std::string name() const = 0;
    virtual std::size_t state_dim() const = 0;
    virtual ActionSpace action_space() const = 0;
    virtual std::size_t max_steps() const = 0;

    virtual std::vector<double> reset(std::uint64_t seed) = 0;
    virtual StepResult step(const Action& action) = 0;

    /// Upper bound on sum_{t=1..horizon} gamma^t r_t for any policy.
    virtual double return_upper_bound(double gamma, std::size_t horizon) const = 0;
};

using EnvironmentFactory = std::function<std::unique_ptr<Environment>()>;

/// Environment from a registry name: "cartpole" or "gridworld:WxH:gx,gy"
/// (plain "gridworld" is 5x5 with the goal in the far corner).
EnvironmentFactory make_environment(const std::string& name);

} // namespace crossgp::policy
