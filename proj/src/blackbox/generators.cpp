#include "crossgp/blackbox/generators.hpp"

#include <bit>
#include <cmath>

#include "crossgp/core/error.hpp"
#include "crossgp/core/rng.hpp"

namespace crossgp {

std::string_view to_string(BooleanFamily family) noexcept
{
    switch (family) {
    case BooleanFamily::Adder:
        return "adder";
    case BooleanFamily::Multiplier:
        return "multiplier";
    case BooleanFamily::Parity:
        return "parity";
    case BooleanFamily::Comparator:
        return "comparator";
    case BooleanFamily::Multiplexer:
        return "multiplexer";
    case BooleanFamily::Majority:
        return "majority";
    }
    return "unknown";
}

std::optional<BooleanFamily> parse_boolean_family(std::string_view name) noexcept
{
    for (const auto f : {BooleanFamily::Adder, BooleanFamily::Multiplier, BooleanFamily::Parity,
                         BooleanFamily::Comparator, BooleanFamily::Multiplexer, BooleanFamily::Majority}) {
        if (to_string(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

std::size_t boolean_input_count(BooleanFamily family, std::size_t size)
{
    switch (family) {
    case BooleanFamily::Adder:
        return 2 * size + 1;
    case BooleanFamily::Multiplier:
    case BooleanFamily::Comparator:
        return 2 * size;
    case BooleanFamily::Parity:
    case BooleanFamily::Majority:
        return size;
    case BooleanFamily::Multiplexer:
        return size >= 64 ? static_cast<std::size_t>(-1) : size + (std::size_t{1} << size);
    }
    return 0;
}

namespace {

std::size_t output_count(BooleanFamily family, std::size_t size)
{
    switch (family) {
    case BooleanFamily::Adder:
        return size + 1;
    case BooleanFamily::Multiplier:
        return 2 * size;
    case BooleanFamily::Comparator:
        return 3;
    default:
        return 1;
    }
}

} // namespace

TruthTable gen_boolean(BooleanFamily family, std::size_t size)
{
    const std::string name = std::string(to_string(family)) + std::to_string(size);
    if (size < 1) {
        throw ConfigError(name + ": size must be >= 1");
    }
    if (family == BooleanFamily::Majority && size % 2 == 0) {
        throw ConfigError(name + ": majority needs an odd number of inputs");
    }
    const std::size_t n_in = boolean_input_count(family, size);
    if (n_in > TruthTable::max_inputs) {
        throw SizeLimitError(name + " needs more than " + std::to_string(TruthTable::max_inputs) + " inputs");
    }
    TruthTable table(name, n_in, output_count(family, size));
    const std::size_t operand_mask = (std::size_t{1} << size) - 1;

    for (std::size_t row = 0; row < table.rows(); ++row) {
        switch (family) {
        case BooleanFamily::Adder: {
            const std::size_t a = row & operand_mask;
            const std::size_t b = (row >> size) & operand_mask;
            const std::size_t cin = (row >> (2 * size)) & 1U;
            const std::size_t sum = a + b + cin;
            for (std::size_t o = 0; o <= size; ++o) {
                table.set(row, o, (sum >> o) & 1U);
            }
            break;
        }
        case BooleanFamily::Multiplier: {
            const std::size_t a = row & operand_mask;
            const std::size_t b = (row >> size) & operand_mask;
            const std::size_t product = a * b;
            for (std::size_t o = 0; o < 2 * size; ++o) {
                table.set(row, o, (product >> o) & 1U);
            }
            break;
        }
        case BooleanFamily::Parity:
            table.set(row, 0, std::popcount(row) % 2 == 1);
            break;
        case BooleanFamily::Comparator: {
            const std::size_t a = row & operand_mask;
            const std::size_t b = (row >> size) & operand_mask;
            table.set(row, 0, a < b);
            table.set(row, 1, a == b);
            table.set(row, 2, a > b);
            break;
        }
        case BooleanFamily::Multiplexer: {
            const std::size_t address = row & operand_mask;
            table.set(row, 0, (row >> (size + address)) & 1U);
            break;
        }
        case BooleanFamily::Majority:
            table.set(row, 0, static_cast<std::size_t>(std::popcount(row)) > size / 2);
            break;
        }
    }
    return table;
}

namespace {

using Args = std::span<const double>;

double poly_sum(double x, int degree)
{
    double sum = 0.0;
    double p = 1.0;
    for (int d = 1; d <= degree; ++d) {
        p *= x;
        sum += p;
    }
    return sum;
}

// clang-format off
const RegressionBenchmark benchmarks[] = {
    {"koza1",    1, -1.0, 1.0, 20,  "x^4 + x^3 + x^2 + x",          [](Args v) { return poly_sum(v[0], 4); }},
    {"koza2",    1, -1.0, 1.0, 20,  "x^5 - 2x^3 + x",               [](Args v) { return std::pow(v[0], 5) - 2 * std::pow(v[0], 3) + v[0]; }},
    {"koza3",    1, -1.0, 1.0, 20,  "x^6 - 2x^4 + x^2",             [](Args v) { return std::pow(v[0], 6) - 2 * std::pow(v[0], 4) + v[0] * v[0]; }},
    {"nguyen1",  1, -1.0, 1.0, 20,  "x^3 + x^2 + x",                [](Args v) { return poly_sum(v[0], 3); }},
    {"nguyen2",  1, -1.0, 1.0, 20,  "x^4 + x^3 + x^2 + x",          [](Args v) { return poly_sum(v[0], 4); }},
    {"nguyen3",  1, -1.0, 1.0, 20,  "x^5 + x^4 + x^3 + x^2 + x",    [](Args v) { return poly_sum(v[0], 5); }},
    {"nguyen4",  1, -1.0, 1.0, 20,  "x^6 + x^5 + x^4 + x^3 + x^2 + x", [](Args v) { return poly_sum(v[0], 6); }},
    {"nguyen5",  1, -1.0, 1.0, 20,  "sin(x^2) cos(x) - 1",          [](Args v) { return std::sin(v[0] * v[0]) * std::cos(v[0]) - 1.0; }},
    {"nguyen6",  1, -1.0, 1.0, 20,  "sin(x) + sin(x + x^2)",        [](Args v) { return std::sin(v[0]) + std::sin(v[0] + v[0] * v[0]); }},
    {"nguyen7",  1,  0.0, 2.0, 20,  "log(x + 1) + log(x^2 + 1)",    [](Args v) { return std::log(v[0] + 1) + std::log(v[0] * v[0] + 1); }},
    {"nguyen8",  1,  0.0, 4.0, 20,  "sqrt(x)",                      [](Args v) { return std::sqrt(v[0]); }},
    {"nguyen9",  2, -1.0, 1.0, 100, "sin(x) + sin(y^2)",            [](Args v) { return std::sin(v[0]) + std::sin(v[1] * v[1]); }},
    {"nguyen10", 2, -1.0, 1.0, 100, "2 sin(x) cos(y)",              [](Args v) { return 2 * std::sin(v[0]) * std::cos(v[1]); }},
    {"nguyen11", 2,  0.0, 1.0, 100, "x^y",                          [](Args v) { return std::pow(v[0], v[1]); }},
    {"nguyen12", 2, -1.0, 1.0, 100, "x^4 - x^3 + y^2/2 - y",        [](Args v) { return std::pow(v[0], 4) - std::pow(v[0], 3) + v[1] * v[1] / 2 - v[1]; }},
};
// clang-format on

} // namespace

std::span<const RegressionBenchmark> regression_benchmarks() noexcept
{
    return benchmarks;
}

const RegressionBenchmark& find_regression_benchmark(std::string_view name)
{
    for (const auto& b : benchmarks) {
        if (b.name == name) {
            return b;
        }
    }
    std::string valid;
    for (const auto& b : benchmarks) {
        valid += (valid.empty() ? "" : ", ") + std::string(b.name);
    }
    throw ConfigError("unknown regression benchmark '" + std::string(name) + "' (valid: " + valid + ")");
}

Dataset gen_regression(std::string_view name, const Sampling& sampling)
{
    const auto& bench = find_regression_benchmark(name);
    const double lo = sampling.lo.value_or(bench.lo);
    const double hi = sampling.hi.value_or(bench.hi);
    const std::size_t count = sampling.count.value_or(bench.count);
    if (count < 1) {
        throw ConfigError(std::string(name) + ": sample count must be >= 1");
    }
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw ConfigError(std::string(name) + ": sampling range must satisfy lo <= hi");
    }
    Rng rng = derive_rng(sampling.seed, 0);
    std::vector<double> x;
    std::vector<double> y;
    x.reserve(count * bench.n_inputs);
    y.reserve(count);
    std::vector<double> row(bench.n_inputs);
    for (std::size_t r = 0; r < count; ++r) {
        for (auto& v : row) {
            v = rng.uniform(lo, hi);
        }
        x.insert(x.end(), row.begin(), row.end());
        y.push_back(bench.target(row));
    }
    return Dataset(std::string(name), bench.n_inputs, 1, std::move(x), std::move(y));
}

} // namespace crossgp
