#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crossgp/core/hyperparameters.hpp"
#include "crossgp/harness/catalogue.hpp"

namespace crossgp::harness {

enum class ModelKind { Tgp, Cgp };

std::string_view to_string(ModelKind kind) noexcept;
ModelKind parse_model_kind(std::string_view name);

enum class ReportFormat { Json, Csv };

std::string_view to_string(ReportFormat format) noexcept;
ReportFormat parse_report_format(std::string_view name);

/// A fully resolved experiment. model_params and problem_params hold every
/// parameter with defaults applied, so an experiment echoes back as a config.
struct ExperimentSpec {
    ModelKind model = ModelKind::Tgp;
    Json model_params = Json::object();
    std::string problem;
    Json problem_params = Json::object();
    Hyperparameters hyperparameters;
    Scheme scheme = Scheme::Generational;
    std::size_t repetitions = 1;
    std::uint64_t base_seed = 42;

    friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

struct RunSettings {
    std::optional<std::string> output;
    ReportFormat format = ReportFormat::Json;
};

struct Config {
    ExperimentSpec spec;
    RunSettings run;
};

/// Strict config schema:
///
///   model            {name: "tgp" | "cgp", functions: [names], ...}
///                    tgp: max_depth 12, init_min_depth 1, init_max_depth 4,
///                         mutation_max_depth 4, constant_probability 0.2,
///                         boolean_constants false, crossover_retries 3
///                    cgp: columns 100, rows 1, levels_back 100
///                    functions default to {add, sub, mul, div} for real
///                    problems and {and, or, nand, nor} for Boolean ones.
///   problem          {name, <problem parameters>} (see list_catalogue)
///   hyperparameters  Hyperparameters fields plus scheme. tgp defaults to
///                    generational, cgp to one_plus_lambda with mutation_rate
///                    0.05. tournament_size defaults to min(4, population_size).
///   run              repetitions 1, base_seed (= hyperparameters.seed),
///                    output (none), format "json"
///
/// Unknown keys and ill-typed values raise ConfigError naming the field.
Config parse_config(const Json& doc);

/// Parses JSON text; syntax errors raise ParseError with the line number.
Json parse_json_text(std::string_view text);

/// Applies "a.b.c=value" to `doc`, creating objects as needed. The value is
/// parsed as JSON when possible and taken as a string otherwise.
void apply_override(Json& doc, std::string_view assignment);

/// The experiment as a config document (model, problem, hyperparameters, run).
Json spec_to_json(const ExperimentSpec& spec);
/// Inverse of spec_to_json. Reads the stored form strictly without touching
/// the problem registry or the file system.
ExperimentSpec spec_from_json(const Json& doc);

} // namespace crossgp::harness
