#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace crossgp {

struct Fitness {
    double cost = 0.0;
    // Run-wide evaluation ordinal (1-based) at which this fitness was computed.
    std::size_t evaluations_used = 0;
};

template <class Genome>
struct Individual {
    Genome genome;
    std::optional<Fitness> fitness;

    double cost() const { return fitness.value().cost; }
};

struct TrajectoryPoint {
    std::size_t generation = 0;
    double best_cost = 0.0;

    friend bool operator==(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};

} // namespace crossgp
