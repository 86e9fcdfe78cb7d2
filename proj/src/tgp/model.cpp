#include "crossgp/tgp/model.hpp"

#include <stdexcept>

namespace crossgp::tgp {

TgpModel::TgpModel(TgpConfig cfg, FunctionSet fset)
    : cfg_(cfg)
    , fset_(std::make_shared<const FunctionSet>(std::move(fset)))
{
    cfg_.validate(*fset_);
}

std::string TgpModel::name() const
{
    return cfg_.n_outputs > 1 ? "tgp-forest" : "tgp";
}

std::vector<TreeForest> TgpModel::initialize(std::size_t count, Rng& rng) const
{
    std::vector<TreeForest> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const InitMethod method = i % 2 == 0 ? InitMethod::Grow : InitMethod::Full;
        out.push_back(init_ramped(cfg_, *fset_, cfg_.init_min_depth, cfg_.init_max_depth, rng, method));
    }
    return out;
}

TreeForest TgpModel::breed(const TreeForest& first, const TreeForest& second, const VariationRates& rates,
                           Rng& rng) const
{
    if (rng.bernoulli(rates.crossover_rate)) {
        TreeForest child = subtree_crossover(first, second, cfg_, rng);
        if (rng.bernoulli(rates.mutation_rate)) {
            child = subtree_mutation(child, *fset_, cfg_, rng);
        }
        return child;
    }
    return subtree_mutation(first, *fset_, cfg_, rng);
}

TreeForest TgpModel::mutate(const TreeForest& parent, double /*mutation_rate*/, Rng& rng) const
{
    return subtree_mutation(parent, *fset_, cfg_, rng);
}

std::unique_ptr<Program> TgpModel::decode(const TreeForest& genome) const
{
    return std::make_unique<TreeProgram>(genome, fset_, cfg_.n_inputs);
}

std::string TgpModel::to_expression(const TreeForest& genome) const
{
    return to_expression_string(genome, *fset_);
}

TreeProgram::TreeProgram(TreeForest forest, std::shared_ptr<const FunctionSet> fset, std::size_t n_inputs)
    : forest_(std::move(forest))
    , fset_(std::move(fset))
    , n_inputs_(n_inputs)
{
}

void TreeProgram::evaluate_into(std::span<const double> inputs, std::span<double> outputs) const
{
    if (inputs.size() != n_inputs_ || outputs.size() != forest_.trees.size()) {
        throw std::invalid_argument("TreeProgram: input/output size mismatch");
    }
    for (std::size_t t = 0; t < forest_.trees.size(); ++t) {
        outputs[t] = evaluate_tree(forest_.trees[t], *fset_, inputs);
    }
}

void TreeProgram::evaluate_packed(std::span<const std::uint64_t> inputs, std::size_t words,
                                  std::span<std::uint64_t> outputs) const
{
    if (inputs.size() != n_inputs_ * words || outputs.size() != forest_.trees.size() * words) {
        throw std::invalid_argument("TreeProgram: packed buffer size mismatch");
    }
    for (std::size_t t = 0; t < forest_.trees.size(); ++t) {
        evaluate_tree_packed(forest_.trees[t], *fset_, inputs, words, outputs.subspan(t * words, words));
    }
}

} // namespace crossgp::tgp
