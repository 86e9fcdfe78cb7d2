#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crossgp/blackbox/dataset.hpp"
#include "crossgp/blackbox/truth_table.hpp"

namespace crossgp {

enum class BooleanFamily { Adder, Multiplier, Parity, Comparator, Multiplexer, Majority };

std::string_view to_string(BooleanFamily family) noexcept;
std::optional<BooleanFamily> parse_boolean_family(std::string_view name) noexcept;

/// Input count of family(size) without building the table.
std::size_t boolean_input_count(BooleanFamily family, std::size_t size);

/// Input/output layout (input 0 and output 0 are least significant):
///   Adder(n):       a = x[0..n), b = x[n..2n), carry-in = x[2n]; sum bits then carry-out
///   Multiplier(n):  a = x[0..n), b = x[n..2n); 2n product bits
///   Parity(n):      1 iff an odd number of inputs are set
///   Comparator(n):  a = x[0..n), b = x[n..2n); outputs (a<b, a==b, a>b)
///   Multiplexer(k): address = x[0..k), data = x[k..k+2^k); selected data bit
///   Majority(n):    n odd; 1 iff more than n/2 inputs are set
/// Throws SizeLimitError beyond 20 inputs and ConfigError for invalid sizes.
TruthTable gen_boolean(BooleanFamily family, std::size_t size);

struct Sampling {
    std::optional<double> lo;
    std::optional<double> hi;
    std::optional<std::size_t> count;
    std::uint64_t seed = 0;
};

struct RegressionBenchmark {
    std::string_view name;
    std::size_t n_inputs;
    double lo;
    double hi;
    std::size_t count;
    std::string_view formula;
    double (*target)(std::span<const double>);
};

/// koza1..koza3, nguyen1..nguyen12.
std::span<const RegressionBenchmark> regression_benchmarks() noexcept;
const RegressionBenchmark& find_regression_benchmark(std::string_view name);

/// Inputs drawn uniformly from [lo, hi) with the sampling seed; targets from
/// the closed-form function. Unset sampling fields take the benchmark defaults.
Dataset gen_regression(std::string_view name, const Sampling& sampling);

} // namespace crossgp
