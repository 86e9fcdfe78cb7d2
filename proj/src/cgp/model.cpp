#include "crossgp/cgp/model.hpp"

namespace crossgp::cgp {

namespace {
CgpConfig with_arity(CgpConfig cfg, const FunctionSet& fset)
{
    cfg.max_arity = fset.max_arity();
    return cfg;
}
} // namespace

CgpModel::CgpModel(CgpConfig cfg, FunctionSet fset)
    : cfg_(with_arity(cfg, fset))
    , fset_(std::make_shared<const FunctionSet>(std::move(fset)))
{
    cfg_.validate(*fset_);
}

std::vector<CgpGenome> CgpModel::initialize(std::size_t count, Rng& rng) const
{
    std::vector<CgpGenome> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(init_random_cgp(cfg_, *fset_, rng));
    }
    return out;
}

CgpGenome CgpModel::breed(const CgpGenome& first, const CgpGenome& /*second*/, const VariationRates& rates,
                          Rng& rng) const
{
    return point_mutation(first, cfg_, *fset_, rates.mutation_rate, rng);
}

CgpGenome CgpModel::mutate(const CgpGenome& parent, double mutation_rate, Rng& rng) const
{
    return point_mutation(parent, cfg_, *fset_, mutation_rate, rng);
}

std::unique_ptr<Program> CgpModel::decode(const CgpGenome& genome) const
{
    return std::make_unique<GraphProgram>(genome, cfg_, fset_);
}

std::string CgpModel::to_expression(const CgpGenome& genome) const
{
    return cgp_to_expression(genome, cfg_, *fset_);
}

GraphProgram::GraphProgram(CgpGenome genome, const CgpConfig& cfg, std::shared_ptr<const FunctionSet> fset)
    : genome_(std::move(genome))
    , cfg_(cfg)
    , fset_(std::move(fset))
    , active_(decode_active(genome_, cfg_, *fset_))
{
}

void GraphProgram::evaluate_into(std::span<const double> inputs, std::span<double> outputs) const
{
    evaluate_active(genome_, cfg_, *fset_, active_, inputs, outputs);
}

void GraphProgram::evaluate_packed(std::span<const std::uint64_t> inputs, std::size_t words,
                                   std::span<std::uint64_t> outputs) const
{
    evaluate_active_packed(genome_, cfg_, *fset_, active_, inputs, words, outputs);
}

} // namespace crossgp::cgp
