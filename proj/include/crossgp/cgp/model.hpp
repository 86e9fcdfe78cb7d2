#pragma once

#include <memory>
#include <string>
#include <vector>

#include "crossgp/cgp/genome.hpp"
#include "crossgp/core/model.hpp"

namespace crossgp::cgp {

/// Cartesian GP: mutation-only, native multi-output.
class CgpModel final : public Model<CgpGenome> {
public:
    /// cfg.max_arity is overwritten with the function set's max arity.
    CgpModel(CgpConfig cfg, FunctionSet fset);

    std::string name() const override { return "cgp"; }
    Domain domain() const override { return fset_->domain(); }
    std::size_t n_inputs() const override { return cfg_.n_inputs; }
    std::size_t n_outputs() const override { return cfg_.n_outputs; }

    std::vector<CgpGenome> initialize(std::size_t count, Rng& rng) const override;
    /// Point mutation of `first`; `second` and the crossover rate are unused.
    CgpGenome breed(const CgpGenome& first, const CgpGenome& second, const VariationRates& rates,
                    Rng& rng) const override;
    CgpGenome mutate(const CgpGenome& parent, double mutation_rate, Rng& rng) const override;
    std::unique_ptr<Program> decode(const CgpGenome& genome) const override;
    std::string to_expression(const CgpGenome& genome) const override;

    const CgpConfig& config() const noexcept { return cfg_; }
    const FunctionSet& function_set() const noexcept { return *fset_; }

private:
    CgpConfig cfg_;
    std::shared_ptr<const FunctionSet> fset_;
};

class GraphProgram final : public Program {
public:
    GraphProgram(CgpGenome genome, const CgpConfig& cfg, std::shared_ptr<const FunctionSet> fset);

    std::size_t n_inputs() const override { return cfg_.n_inputs; }
    std::size_t n_outputs() const override { return cfg_.n_outputs; }
    Domain domain() const override { return fset_->domain(); }

    void evaluate_into(std::span<const double> inputs, std::span<double> outputs) const override;
    void evaluate_packed(std::span<const std::uint64_t> inputs, std::size_t words,
                         std::span<std::uint64_t> outputs) const override;

    const ActiveSet& active() const noexcept { return active_; }

private:
    CgpGenome genome_;
    CgpConfig cfg_;
    std::shared_ptr<const FunctionSet> fset_;
    ActiveSet active_;
};

} // namespace crossgp::cgp
