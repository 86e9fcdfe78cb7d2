#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "crossgp/blackbox/dataset.hpp"
#include "crossgp/blackbox/truth_table.hpp"
#include "crossgp/core/problem.hpp"

namespace crossgp {

enum class Metric { MSE, MAE, HammingDistance };

std::string_view to_string(Metric metric) noexcept;
Metric parse_metric(std::string_view name);

/// Non-finite program outputs are replaced by this before differencing.
inline constexpr double nonfinite_penalty = 1e15;

double fitness_regression(const Program& program, const Dataset& data, Metric metric);

/// Total Hamming distance over all (row, output) pairs, computed 64 rows per
/// word through Program::evaluate_packed.
double fitness_logic(const Program& program, const TruthTable& table);
double fitness_logic(const Program& program, const TruthTable& table, std::span<const std::uint64_t> patterns);

/// Input-output supervised problem: a regression dataset or a truth table.
class BlackBoxProblem final : public Problem {
public:
    static constexpr double default_regression_epsilon = 1e-10;

    static BlackBoxProblem regression(Dataset data, Metric metric = Metric::MSE,
                                      double epsilon = default_regression_epsilon);
    static BlackBoxProblem logic(TruthTable table);

    std::string name() const override;
    Domain domain() const override;
    std::size_t n_inputs() const override;
    std::size_t n_outputs() const override;
    double cost(const Program& program, Rng& rng) const override;
    double ideal_threshold() const override { return epsilon_; }

    Metric metric() const noexcept { return metric_; }
    const std::variant<Dataset, TruthTable>& payload() const noexcept { return payload_; }

private:
    BlackBoxProblem(std::variant<Dataset, TruthTable> payload, Metric metric, double epsilon);

    std::variant<Dataset, TruthTable> payload_;
    Metric metric_;
    double epsilon_;
    std::vector<std::uint64_t> patterns_;
};

} // namespace crossgp
