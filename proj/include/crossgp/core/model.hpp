#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "crossgp/core/primitives.hpp"
#include "crossgp/core/program.hpp"
#include "crossgp/core/rng.hpp"

namespace crossgp {

struct VariationRates {
    double crossover_rate = 0.9;
    double mutation_rate = 0.1;
};

/// Contract every program representation implements.
///
/// A model owns its representation parameters and the problem shape
/// (input/output counts, function set). It initializes genomes, breeds new
/// ones from parents, and decodes genomes into executable programs; the
/// evolutionary loop in evolve.hpp drives it without knowing the encoding.
template <class G>
class Model {
public:
    using genome_type = G;

    virtual ~Model() = default;

    virtual std::string name() const = 0;
    virtual Domain domain() const = 0;
    virtual std::size_t n_inputs() const = 0;
    virtual std::size_t n_outputs() const = 0;

    virtual std::vector<G> initialize(std::size_t count, Rng& rng) const = 0;

    /// Generational breeding: one child from two tournament winners.
    virtual G breed(const G& first, const G& second, const VariationRates& rates, Rng& rng) const = 0;

    /// Mutation-only offspring, used by the (mu + lambda) scheme.
    virtual G mutate(const G& parent, double mutation_rate, Rng& rng) const = 0;

    virtual std::unique_ptr<Program> decode(const G& genome) const = 0;

    virtual std::string to_expression(const G& genome) const = 0;
};

} // namespace crossgp
