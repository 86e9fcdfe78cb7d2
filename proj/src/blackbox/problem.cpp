#include "crossgp/blackbox/problem.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "crossgp/core/error.hpp"

namespace crossgp {

std::string_view to_string(Metric metric) noexcept
{
    switch (metric) {
    case Metric::MSE:
        return "mse";
    case Metric::MAE:
        return "mae";
    case Metric::HammingDistance:
        return "hamming";
    }
    return "unknown";
}

Metric parse_metric(std::string_view name)
{
    for (const auto m : {Metric::MSE, Metric::MAE, Metric::HammingDistance}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw ConfigError("unknown metric '" + std::string(name) + "' (valid: mse, mae, hamming)");
}

double fitness_regression(const Program& program, const Dataset& data, Metric metric)
{
    if (program.n_inputs() != data.n_inputs() || program.n_outputs() != data.n_outputs()) {
        throw ConfigError("program shape does not match dataset '" + data.name() + "'");
    }
    if (metric == Metric::HammingDistance) {
        throw ConfigError("hamming distance is not a regression metric");
    }
    std::vector<double> out(data.n_outputs());
    double total = 0.0;
    for (std::size_t r = 0; r < data.rows(); ++r) {
        program.evaluate_into(data.x(r), out);
        const auto target = data.y(r);
        for (std::size_t o = 0; o < out.size(); ++o) {
            const double predicted = std::isfinite(out[o]) ? out[o] : nonfinite_penalty;
            const double err = predicted - target[o];
            total += metric == Metric::MSE ? err * err : std::fabs(err);
        }
    }
    return total / static_cast<double>(data.rows() * data.n_outputs());
}

double fitness_logic(const Program& program, const TruthTable& table, std::span<const std::uint64_t> patterns)
{
    if (program.n_inputs() != table.n_inputs() || program.n_outputs() != table.n_outputs()) {
        throw ConfigError("program shape does not match truth table '" + table.name() + "'");
    }
    constexpr std::size_t chunk_words = 256;
    const std::size_t words = table.words_per_output();
    const std::size_t n_in = table.n_inputs();
    const std::size_t n_out = table.n_outputs();

    std::vector<std::uint64_t> in_chunk;
    std::vector<std::uint64_t> out_chunk;
    std::uint64_t mismatches = 0;
    for (std::size_t first = 0; first < words; first += chunk_words) {
        const std::size_t count = std::min(chunk_words, words - first);
        std::span<const std::uint64_t> inputs = patterns;
        if (count != words) {
            in_chunk.resize(n_in * count);
            for (std::size_t i = 0; i < n_in; ++i) {
                std::copy_n(patterns.data() + i * words + first, count, in_chunk.data() + i * count);
            }
            inputs = in_chunk;
        }
        out_chunk.resize(n_out * count);
        program.evaluate_packed(inputs, count, out_chunk);
        for (std::size_t o = 0; o < n_out; ++o) {
            const auto expected = table.output_words(o);
            for (std::size_t w = 0; w < count; ++w) {
                const std::size_t global = first + w;
                std::uint64_t diff = out_chunk[o * count + w] ^ expected[global];
                if (global + 1 == words) {
                    diff &= table.last_word_mask();
                }
                mismatches += static_cast<std::uint64_t>(std::popcount(diff));
            }
        }
    }
    return static_cast<double>(mismatches);
}

double fitness_logic(const Program& program, const TruthTable& table)
{
    const auto patterns = input_patterns(table.n_inputs());
    return fitness_logic(program, table, patterns);
}

BlackBoxProblem::BlackBoxProblem(std::variant<Dataset, TruthTable> payload, Metric metric, double epsilon)
    : payload_(std::move(payload))
    , metric_(metric)
    , epsilon_(epsilon)
{
    const bool logic = std::holds_alternative<TruthTable>(payload_);
    if (logic != (metric_ == Metric::HammingDistance)) {
        throw ConfigError("metric '" + std::string(to_string(metric_)) + "' does not fit this problem's domain");
    }
    if (!(epsilon_ >= 0.0)) {
        throw ConfigError("ideal epsilon must be >= 0");
    }
    if (logic) {
        patterns_ = input_patterns(std::get<TruthTable>(payload_).n_inputs());
    }
}

BlackBoxProblem BlackBoxProblem::regression(Dataset data, Metric metric, double epsilon)
{
    return BlackBoxProblem(std::move(data), metric, epsilon);
}

BlackBoxProblem BlackBoxProblem::logic(TruthTable table)
{
    return BlackBoxProblem(std::move(table), Metric::HammingDistance, 0.0);
}

std::string BlackBoxProblem::name() const
{
    return std::visit([](const auto& p) { return p.name(); }, payload_);
}

Domain BlackBoxProblem::domain() const
{
    return std::holds_alternative<TruthTable>(payload_) ? Domain::Boolean : Domain::Real;
}

std::size_t BlackBoxProblem::n_inputs() const
{
    return std::visit([](const auto& p) { return p.n_inputs(); }, payload_);
}

std::size_t BlackBoxProblem::n_outputs() const
{
    return std::visit([](const auto& p) { return p.n_outputs(); }, payload_);
}

double BlackBoxProblem::cost(const Program& program, Rng& /*rng*/) const
{
    if (const auto* table = std::get_if<TruthTable>(&payload_)) {
        return fitness_logic(program, *table, patterns_);
    }
    return fitness_regression(program, std::get<Dataset>(payload_), metric_);
}

} // namespace crossgp
