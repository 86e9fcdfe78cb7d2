#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "crossgp/core/problem.hpp"

namespace crossgp::harness {

using Json = nlohmann::ordered_json;

enum class ProblemDomain { LogicSynthesis, SymbolicRegression, PolicySearch };

std::string_view to_string(ProblemDomain domain) noexcept;
std::optional<ProblemDomain> parse_problem_domain(std::string_view name) noexcept;
std::span<const ProblemDomain> all_problem_domains() noexcept;

enum class ParamType { Integer, Real, String };

struct ParamSpec {
    std::string name;
    ParamType type = ParamType::Integer;
    // Shown in the catalogue; computed defaults are described in `description`.
    std::string default_text;
    std::string description;
    bool nullable = false;
};

struct CatalogueEntry {
    std::string name;
    ProblemDomain domain = ProblemDomain::LogicSynthesis;
    std::string description;
    std::vector<ParamSpec> params;
};

/// Registered problems in listing order. File-backed problems appear under
/// the pseudo-names "<path>.tt" and "<path>.csv".
const std::vector<CatalogueEntry>& catalogue();

/// Human-readable listing grouped by domain.
std::string list_catalogue(std::optional<ProblemDomain> only = std::nullopt);

struct ResolvedProblem {
    std::shared_ptr<const Problem> problem;
    ProblemDomain domain = ProblemDomain::LogicSynthesis;
    // Every parameter with defaults applied, in schema order.
    Json params;
};

/// Builds a problem from a registry name ("parity", "koza1", "cartpole",
/// "gridworld" or "gridworld:WxH:gx,gy") or a file path ending in ".tt"
/// (truth table) or ".csv" (dataset). `params` must be an object; unknown or
/// ill-typed keys raise ConfigError.
ResolvedProblem resolve_problem(const std::string& name, const Json& params);

} // namespace crossgp::harness
