#include "crossgp/harness/catalogue.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "crossgp/blackbox/generators.hpp"
#include "crossgp/blackbox/problem.hpp"
#include "crossgp/core/error.hpp"
#include "crossgp/core/text.hpp"
#include "crossgp/policy/cartpole.hpp"
#include "crossgp/policy/gridworld.hpp"
#include "crossgp/policy/problem.hpp"
#include "fields.hpp"

namespace crossgp::harness {

namespace {

constexpr std::array<ProblemDomain, 3> domains{ProblemDomain::LogicSynthesis, ProblemDomain::SymbolicRegression,
                                               ProblemDomain::PolicySearch};

struct FamilyDefault {
    BooleanFamily family;
    std::size_t size;
    const char* description;
};

constexpr std::array<FamilyDefault, 6> family_defaults{{
    {BooleanFamily::Adder, 1, "ripple adder: a + b + carry-in, n+1 outputs"},
    {BooleanFamily::Multiplier, 2, "unsigned multiplier: a * b, 2n outputs"},
    {BooleanFamily::Parity, 3, "odd parity of n inputs"},
    {BooleanFamily::Comparator, 2, "comparator: outputs (a<b, a==b, a>b)"},
    {BooleanFamily::Multiplexer, 2, "multiplexer with k address bits and 2^k data bits"},
    {BooleanFamily::Majority, 3, "majority of n inputs, n odd"},
}};

bool ends_with(std::string_view s, std::string_view suffix)
{
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::vector<ParamSpec> regression_params(const RegressionBenchmark& b)
{
    return {
        {"lo", ParamType::Real, text::format_double(b.lo), "lower end of the sampling range", false},
        {"hi", ParamType::Real, text::format_double(b.hi), "upper end of the sampling range", false},
        {"count", ParamType::Integer, std::to_string(b.count), "number of sample points", false},
        {"sampling_seed", ParamType::Integer, "0", "seed of the point sampler", false},
        {"metric", ParamType::String, "mse", "mse or mae", false},
        {"epsilon", ParamType::Real, "1e-10", "success threshold on the metric", false},
    };
}

std::vector<ParamSpec> episode_params(std::string episodes, std::string max_steps, std::string target)
{
    return {
        {"episodes", ParamType::Integer, std::move(episodes), "episodes per evaluation", false},
        {"gamma", ParamType::Real, "1", "discount factor in (0, 1]", false},
        {"max_steps", ParamType::Integer, std::move(max_steps), "episode horizon", false},
        {"episode_seed", ParamType::Integer, "0", "reset seed of episode 0", false},
        {"target_return", ParamType::Real, std::move(target), "mean return counted as success; null disables",
         true},
    };
}

std::vector<CatalogueEntry> build_catalogue()
{
    std::vector<CatalogueEntry> out;
    for (const auto& f : family_defaults) {
        out.push_back({std::string(to_string(f.family)), ProblemDomain::LogicSynthesis, f.description,
                       {{"size", ParamType::Integer, std::to_string(f.size), "family size parameter", false}}});
    }
    out.push_back({"<path>.tt", ProblemDomain::LogicSynthesis, "truth table file (inputs N outputs M header)", {}});
    for (const auto& b : regression_benchmarks()) {
        out.push_back({std::string(b.name), ProblemDomain::SymbolicRegression, std::string(b.formula),
                       regression_params(b)});
    }
    out.push_back({"<path>.csv", ProblemDomain::SymbolicRegression, "dataset file (x0..,y0.. header)",
                   {{"metric", ParamType::String, "mse", "mse or mae", false},
                    {"epsilon", ParamType::Real, "1e-10", "success threshold on the metric", false}}});

    out.push_back({"cartpole", ProblemDomain::PolicySearch, "balance a pole on a cart; +1 per step",
                   episode_params("10", "200", "return upper bound")});
    auto grid = episode_params("1", "4*(width+height)", "shortest-path return");
    grid.insert(grid.begin(),
                {{"width", ParamType::Integer, "5", "grid width", false},
                 {"height", ParamType::Integer, "5", "grid height", false},
                 {"goal_x", ParamType::Integer, "width-1", "goal column", false},
                 {"goal_y", ParamType::Integer, "height-1", "goal row", false}});
    out.push_back({"gridworld", ProblemDomain::PolicySearch,
                   "reach the goal from (0,0); -1 per move (also gridworld:WxH:gx,gy)", std::move(grid)});
    return out;
}

std::string registry_names()
{
    std::vector<std::string> names;
    for (const auto& e : catalogue()) {
        if (e.name.front() != '<') {
            names.push_back(e.name);
        }
    }
    return detail::join(names);
}

Metric read_metric(detail::FieldReader& r, ResolvedProblem& out)
{
    const std::string name = r.get_string("metric").value_or("mse");
    const Metric metric = [&] {
        try {
            return parse_metric(name);
        } catch (const ConfigError& e) {
            throw ConfigError(r.field("metric") + ": " + e.what());
        }
    }();
    if (metric == Metric::HammingDistance) {
        throw ConfigError(r.field("metric") + ": regression problems take mse or mae");
    }
    out.params["metric"] = name;
    return metric;
}

double read_epsilon(detail::FieldReader& r, ResolvedProblem& out)
{
    const double eps = r.get_real("epsilon").value_or(BlackBoxProblem::default_regression_epsilon);
    if (!(eps >= 0.0)) {
        throw ConfigError(r.field("epsilon") + ": must be >= 0");
    }
    out.params["epsilon"] = eps;
    return eps;
}

policy::EpisodeConfig read_episodes(detail::FieldReader& r, ResolvedProblem& out, std::size_t default_episodes,
                                    std::size_t default_max_steps)
{
    policy::EpisodeConfig cfg;
    cfg.episodes = r.get_uint("episodes").value_or(default_episodes);
    cfg.gamma = r.get_real("gamma").value_or(1.0);
    cfg.max_steps = r.get_uint("max_steps").value_or(default_max_steps);
    cfg.base_seed = r.get_uint("episode_seed").value_or(0);
    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        throw ConfigError("problem: " + std::string(e.what()));
    }
    out.params["episodes"] = cfg.episodes;
    out.params["gamma"] = cfg.gamma;
    out.params["max_steps"] = cfg.max_steps;
    out.params["episode_seed"] = cfg.base_seed;
    return cfg;
}

std::optional<double> read_target(detail::FieldReader& r, ResolvedProblem& out, double computed)
{
    std::optional<double> target = computed;
    if (const Json* v = r.raw("target_return"); v != nullptr && v->is_null()) {
        target.reset();
    } else if (v != nullptr) {
        target = r.get_real("target_return");
    }
    out.params["target_return"] = target ? Json(*target) : Json(nullptr);
    return target;
}

std::size_t read_size(detail::FieldReader& r, const char* key, std::size_t fallback)
{
    const auto v = r.get_uint(key).value_or(fallback);
    return static_cast<std::size_t>(v);
}

void resolve_gridworld(const std::string& name, detail::FieldReader& r, ResolvedProblem& out)
{
    policy::GridworldConfig cfg;
    if (name != "gridworld") {
        // Borrow the shorthand parser, then read the dimensions back.
        const auto env = policy::make_environment(name)();
        cfg = dynamic_cast<const policy::Gridworld&>(*env).config();
        cfg.max_steps = 0;
    }
    cfg.width = read_size(r, "width", cfg.width);
    cfg.height = read_size(r, "height", cfg.height);
    const bool shorthand_dims = name != "gridworld" && !r.has("width") && !r.has("height");
    const policy::Cell default_goal = shorthand_dims
                                  ? cfg.goal
                                  : policy::Cell{cfg.width > 0 ? cfg.width - 1 : 0, cfg.height > 0 ? cfg.height - 1 : 0};
    cfg.goal.x = read_size(r, "goal_x", default_goal.x);
    cfg.goal.y = read_size(r, "goal_y", default_goal.y);
    out.params["width"] = cfg.width;
    out.params["height"] = cfg.height;
    out.params["goal_x"] = cfg.goal.x;
    out.params["goal_y"] = cfg.goal.y;

    const auto episodes = read_episodes(r, out, 1, 4 * (cfg.width + cfg.height));
    cfg.max_steps = episodes.max_steps;
    const policy::Gridworld probe(cfg);
    const auto target = read_target(r, out, probe.shortest_path_return(episodes.gamma));
    out.problem = std::make_shared<policy::PolicyProblem>(
        probe.name(), [cfg] { return std::make_unique<policy::Gridworld>(cfg); }, episodes, target);
}

} // namespace

std::string_view to_string(ProblemDomain domain) noexcept
{
    switch (domain) {
    case ProblemDomain::LogicSynthesis:
        return "logic_synthesis";
    case ProblemDomain::SymbolicRegression:
        return "symbolic_regression";
    case ProblemDomain::PolicySearch:
        return "policy_search";
    }
    return "unknown";
}

std::optional<ProblemDomain> parse_problem_domain(std::string_view name) noexcept
{
    for (const auto d : domains) {
        if (to_string(d) == name) {
            return d;
        }
    }
    return std::nullopt;
}

std::span<const ProblemDomain> all_problem_domains() noexcept
{
    return domains;
}

const std::vector<CatalogueEntry>& catalogue()
{
    static const std::vector<CatalogueEntry> entries = build_catalogue();
    return entries;
}

std::string list_catalogue(std::optional<ProblemDomain> only)
{
    std::ostringstream out;
    for (const auto domain : domains) {
        if (only && *only != domain) {
            continue;
        }
        out << to_string(domain) << '\n';
        for (const auto& e : catalogue()) {
            if (e.domain != domain) {
                continue;
            }
            out << "  " << e.name << "  " << e.description << '\n';
            for (const auto& p : e.params) {
                const char* type = p.type == ParamType::Integer ? "integer" : p.type == ParamType::Real ? "real" : "string";
                out << "      " << p.name << " (" << type << ", default " << p.default_text << ")  " << p.description
                    << '\n';
            }
        }
    }
    return out.str();
}

ResolvedProblem resolve_problem(const std::string& name, const Json& params)
{
    detail::FieldReader r(params, "problem");
    ResolvedProblem out;
    out.params = Json::object();

    if (ends_with(name, ".tt")) {
        out.domain = ProblemDomain::LogicSynthesis;
        const std::string stem = name.substr(name.find_last_of('/') + 1);
        try {
            auto table = load_truth_table(text::read_file(name), stem.substr(0, stem.size() - 3));
            out.problem = std::make_shared<BlackBoxProblem>(BlackBoxProblem::logic(std::move(table)));
        } catch (const ParseError& e) {
            throw ParseError(e.line(), name + ": " + std::string(e.what()));
        }
    } else if (ends_with(name, ".csv")) {
        out.domain = ProblemDomain::SymbolicRegression;
        const std::string stem = name.substr(name.find_last_of('/') + 1);
        const Metric metric = read_metric(r, out);
        const double eps = read_epsilon(r, out);
        try {
            auto data = load_dataset_csv(text::read_file(name), stem.substr(0, stem.size() - 4));
            out.problem = std::make_shared<BlackBoxProblem>(BlackBoxProblem::regression(std::move(data), metric, eps));
        } catch (const ParseError& e) {
            throw ParseError(e.line(), name + ": " + std::string(e.what()));
        }
    } else if (const auto family = parse_boolean_family(name)) {
        out.domain = ProblemDomain::LogicSynthesis;
        const auto it = std::find_if(family_defaults.begin(), family_defaults.end(),
                                     [&](const FamilyDefault& f) { return f.family == *family; });
        const std::size_t size = read_size(r, "size", it->size);
        out.params["size"] = size;
        try {
            out.problem = std::make_shared<BlackBoxProblem>(BlackBoxProblem::logic(gen_boolean(*family, size)));
        } catch (const SizeLimitError& e) {
            throw ConfigError("problem.size: " + std::string(e.what()));
        } catch (const ConfigError& e) {
            throw ConfigError("problem.size: " + std::string(e.what()));
        }
    } else if (const auto bench = std::find_if(regression_benchmarks().begin(), regression_benchmarks().end(),
                                               [&](const RegressionBenchmark& b) { return b.name == name; });
               bench != regression_benchmarks().end()) {
        out.domain = ProblemDomain::SymbolicRegression;
        Sampling sampling;
        sampling.lo = r.get_real("lo").value_or(bench->lo);
        sampling.hi = r.get_real("hi").value_or(bench->hi);
        sampling.count = read_size(r, "count", bench->count);
        sampling.seed = r.get_uint("sampling_seed").value_or(0);
        out.params["lo"] = *sampling.lo;
        out.params["hi"] = *sampling.hi;
        out.params["count"] = *sampling.count;
        out.params["sampling_seed"] = sampling.seed;
        const Metric metric = read_metric(r, out);
        const double eps = read_epsilon(r, out);
        try {
            out.problem = std::make_shared<BlackBoxProblem>(
                BlackBoxProblem::regression(gen_regression(name, sampling), metric, eps));
        } catch (const ConfigError& e) {
            throw ConfigError("problem: " + std::string(e.what()));
        }
    } else if (name == "cartpole") {
        out.domain = ProblemDomain::PolicySearch;
        const auto episodes = read_episodes(r, out, 10, policy::CartPole::default_max_steps);
        const policy::CartPole probe(episodes.max_steps);
        const auto target = read_target(r, out, probe.return_upper_bound(episodes.gamma, episodes.max_steps));
        const std::size_t horizon = episodes.max_steps;
        out.problem = std::make_shared<policy::PolicyProblem>(
            "cartpole", [horizon] { return std::make_unique<policy::CartPole>(horizon); }, episodes, target);
    } else if (name == "gridworld" || name.rfind("gridworld:", 0) == 0) {
        out.domain = ProblemDomain::PolicySearch;
        try {
            resolve_gridworld(name, r, out);
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            throw ConfigError(msg.rfind("problem", 0) == 0 ? msg : "problem: " + msg);
        }
    } else {
        throw ConfigError("problem.name: unknown problem '" + name + "' (valid: " + registry_names() +
                          ", or a path ending in .tt or .csv)");
    }
    r.finish();
    return out;
}

} // namespace crossgp::harness
