#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "crossgp/core/primitives.hpp"

namespace crossgp {

/// Executable phenotype produced by Model::decode.
///
/// Evaluation is pure: equal inputs always give equal outputs, and no input
/// makes it fault (every primitive is total).
class Program {
public:
    virtual ~Program() = default;

    virtual std::size_t n_inputs() const = 0;
    virtual std::size_t n_outputs() const = 0;
    virtual Domain domain() const = 0;

    /// One row. `outputs.size()` must equal n_outputs().
    virtual void evaluate_into(std::span<const double> inputs, std::span<double> outputs) const = 0;

    /// Bit-parallel evaluation of `words` 64-row blocks (Boolean domain only).
    /// Layout is variable-major: `inputs[i * words + w]`, `outputs[o * words + w]`.
    virtual void evaluate_packed(std::span<const std::uint64_t> inputs, std::size_t words,
                                 std::span<std::uint64_t> outputs) const = 0;

    std::vector<double> evaluate(std::span<const double> inputs) const
    {
        std::vector<double> out(n_outputs());
        evaluate_into(inputs, out);
        return out;
    }
};

} // namespace crossgp
