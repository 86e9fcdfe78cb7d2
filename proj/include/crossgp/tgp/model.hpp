#pragma once

#include <memory>
#include <string>
#include <vector>

#include "crossgp/core/model.hpp"
#include "crossgp/tgp/tree.hpp"

namespace crossgp::tgp {

/// Tree-based GP. Multi-output problems use a forest with one tree per
/// output; such models report themselves as "tgp-forest".
class TgpModel final : public Model<TreeForest> {
public:
    TgpModel(TgpConfig cfg, FunctionSet fset);

    std::string name() const override;
    Domain domain() const override { return fset_->domain(); }
    std::size_t n_inputs() const override { return cfg_.n_inputs; }
    std::size_t n_outputs() const override { return cfg_.n_outputs; }

    /// Ramped half-and-half: even ordinals grow, odd ordinals full.
    std::vector<TreeForest> initialize(std::size_t count, Rng& rng) const override;

    /// With probability crossover_rate: crossover then mutation with
    /// probability mutation_rate. Otherwise: clone of `first` plus one mutation.
    TreeForest breed(const TreeForest& first, const TreeForest& second, const VariationRates& rates,
                     Rng& rng) const override;

    /// Always applies exactly one subtree mutation.
    TreeForest mutate(const TreeForest& parent, double mutation_rate, Rng& rng) const override;

    std::unique_ptr<Program> decode(const TreeForest& genome) const override;
    std::string to_expression(const TreeForest& genome) const override;

    const TgpConfig& config() const noexcept { return cfg_; }
    const FunctionSet& function_set() const noexcept { return *fset_; }

private:
    TgpConfig cfg_;
    std::shared_ptr<const FunctionSet> fset_;
};

class TreeProgram final : public Program {
public:
    TreeProgram(TreeForest forest, std::shared_ptr<const FunctionSet> fset, std::size_t n_inputs);

    std::size_t n_inputs() const override { return n_inputs_; }
    std::size_t n_outputs() const override { return forest_.trees.size(); }
    Domain domain() const override { return fset_->domain(); }

    void evaluate_into(std::span<const double> inputs, std::span<double> outputs) const override;
    void evaluate_packed(std::span<const std::uint64_t> inputs, std::size_t words,
                         std::span<std::uint64_t> outputs) const override;

private:
    TreeForest forest_;
    std::shared_ptr<const FunctionSet> fset_;
    std::size_t n_inputs_;
};

} // namespace crossgp::tgp
