#include "crossgp/policy/environment.hpp"

#include <string_view>

#include "crossgp/core/error.hpp"
#include "crossgp/core/text.hpp"
#include "crossgp/policy/cartpole.hpp"
#include "crossgp/policy/gridworld.hpp"

namespace crossgp::policy {

bool ActionSpace::contains(const Action& action) const
{
    if (kind == Kind::Discrete) {
        const auto* idx = std::get_if<std::size_t>(&action);
        return idx != nullptr && *idx < n;
    }
    const auto* v = std::get_if<double>(&action);
    return v != nullptr && *v >= lo && *v <= hi;
}

std::size_t ActionSpace::program_outputs() const noexcept
{
    if (kind == Kind::Continuous1D || n <= 2) {
        return 1;
    }
    return n;
}

namespace {

GridworldConfig parse_gridworld(const std::string& name)
{
    GridworldConfig cfg;
    const auto parts = text::split(name, ':');
    if (parts.size() == 1) {
        return cfg;
    }
    auto fail = [&] {
        throw ConfigError("bad gridworld name '" + name + "' (expected gridworld:WxH:gx,gy)");
    };
    if (parts.size() != 3) {
        fail();
    }
    const auto dims = text::split(parts[1], 'x');
    const auto goal = text::split(parts[2], ',');
    if (dims.size() != 2 || goal.size() != 2) {
        fail();
    }
    const auto w = text::parse_uint(dims[0]);
    const auto h = text::parse_uint(dims[1]);
    const auto gx = text::parse_uint(goal[0]);
    const auto gy = text::parse_uint(goal[1]);
    if (!w || !h || !gx || !gy) {
        fail();
    }
    cfg.width = static_cast<std::size_t>(*w);
    cfg.height = static_cast<std::size_t>(*h);
    cfg.goal = {static_cast<std::size_t>(*gx), static_cast<std::size_t>(*gy)};
    return cfg;
}

} // namespace

EnvironmentFactory make_environment(const std::string& name)
{
    if (name == "cartpole") {
        return [] { return std::make_unique<CartPole>(); };
    }
    if (name == "gridworld" || name.rfind("gridworld:", 0) == 0) {
        const GridworldConfig cfg = parse_gridworld(name);
        Gridworld probe(cfg); // validates eagerly
        return [cfg] { return std::make_unique<Gridworld>(cfg); };
    }
    throw ConfigError("unknown environment '" + name + "' (valid: cartpole, gridworld:WxH:gx,gy)");
}

} // namespace crossgp::policy
