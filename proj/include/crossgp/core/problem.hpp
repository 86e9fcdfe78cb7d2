#pragma once

#include <cstddef>
#include <string>

#include "crossgp/core/primitives.hpp"
#include "crossgp/core/program.hpp"
#include "crossgp/core/rng.hpp"

namespace crossgp {

/// Anything that can score a Program. Costs are minimized and never negative.
class Problem {
public:
    virtual ~Problem() = default;

    virtual std::string name() const = 0;
    virtual Domain domain() const = 0;
    virtual std::size_t n_inputs() const = 0;
    virtual std::size_t n_outputs() const = 0;

    /// `rng` is a per-evaluation stream; deterministic problems ignore it.
    virtual double cost(const Program& program, Rng& rng) const = 0;

    /// Costs at or below this value count as solving the problem.
    virtual double ideal_threshold() const = 0;

    bool is_ideal(double cost) const { return cost <= ideal_threshold(); }
};

} // namespace crossgp
