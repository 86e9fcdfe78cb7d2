#include "crossgp/harness/config.hpp"

#include <algorithm>

#include "crossgp/core/error.hpp"
#include "crossgp/core/text.hpp"
#include "fields.hpp"
#include "models.hpp"

namespace crossgp::harness {

namespace {

struct SchemeAndHp {
    Hyperparameters hp;
    Scheme scheme;
};

SchemeAndHp read_hyperparameters(const Json* section, ModelKind model)
{
    const Json empty = Json::object();
    detail::FieldReader r(section != nullptr ? *section : empty, "hyperparameters");
    SchemeAndHp out{};
    Hyperparameters& hp = out.hp;
    if (model == ModelKind::Cgp) {
        hp.mutation_rate = 0.05;
    }
    hp.population_size = r.get_uint("population_size").value_or(hp.population_size);
    hp.max_evaluations = r.get_uint("max_evaluations").value_or(hp.max_evaluations);
    hp.mutation_rate = r.get_real("mutation_rate").value_or(hp.mutation_rate);
    hp.crossover_rate = r.get_real("crossover_rate").value_or(hp.crossover_rate);
    hp.tournament_size = r.get_uint("tournament_size").value_or(std::min<std::size_t>(4, hp.population_size));
    hp.elitism = r.get_uint("elitism").value_or(std::min<std::size_t>(hp.elitism, hp.population_size));
    hp.mu = r.get_uint("mu").value_or(hp.mu);
    hp.lambda = r.get_uint("lambda").value_or(hp.lambda);
    hp.seed = r.get_uint("seed").value_or(hp.seed);
    const auto scheme = r.get_string("scheme");
    out.scheme = model == ModelKind::Cgp ? Scheme::OnePlusLambda : Scheme::Generational;
    if (scheme) {
        try {
            out.scheme = parse_scheme(*scheme);
        } catch (const ConfigError& e) {
            throw ConfigError(r.field("scheme") + ": " + e.what());
        }
    }
    r.finish();
    try {
        hp.validate();
    } catch (const ConfigError& e) {
        throw ConfigError("hyperparameters: " + std::string(e.what()));
    }
    return out;
}

Json split_named(const Json* section, const char* path, std::string& name)
{
    if (section == nullptr) {
        throw ConfigError(std::string(path) + ": missing section");
    }
    if (!section->is_object()) {
        throw ConfigError(std::string(path) + ": expected an object");
    }
    const auto it = section->find("name");
    if (it == section->end() || !it->is_string()) {
        throw ConfigError(std::string(path) + ".name: expected a string");
    }
    name = it->get<std::string>();
    Json params = *section;
    params.erase("name");
    return params;
}

ModelKind read_model_kind(const std::string& name)
{
    try {
        return parse_model_kind(name);
    } catch (const ConfigError& e) {
        throw ConfigError("model.name: " + std::string(e.what()));
    }
}

} // namespace

std::string_view to_string(ModelKind kind) noexcept
{
    return kind == ModelKind::Tgp ? "tgp" : "cgp";
}

ModelKind parse_model_kind(std::string_view name)
{
    if (name == "tgp") {
        return ModelKind::Tgp;
    }
    if (name == "cgp") {
        return ModelKind::Cgp;
    }
    throw ConfigError("unknown model '" + std::string(name) + "' (valid: tgp, cgp)");
}

std::string_view to_string(ReportFormat format) noexcept
{
    return format == ReportFormat::Json ? "json" : "csv";
}

ReportFormat parse_report_format(std::string_view name)
{
    if (name == "json") {
        return ReportFormat::Json;
    }
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    throw ConfigError("unknown report format '" + std::string(name) + "' (valid: json, csv)");
}

Config parse_config(const Json& doc)
{
    detail::FieldReader top(doc, "");
    const Json* model_section = top.raw("model");
    const Json* problem_section = top.raw("problem");
    const Json* hp_section = top.raw("hyperparameters");
    const Json* run_section = top.raw("run");
    top.finish();

    Config cfg;
    ExperimentSpec& spec = cfg.spec;

    const Json problem_params = split_named(problem_section, "problem", spec.problem);
    const ResolvedProblem resolved = resolve_problem(spec.problem, problem_params);
    spec.problem_params = resolved.params;

    std::string model_name;
    const Json model_params = split_named(model_section, "model", model_name);
    spec.model = read_model_kind(model_name);
    spec.model_params = detail::build_model(spec.model, model_params, *resolved.problem).params;

    auto [hp, scheme] = read_hyperparameters(hp_section, spec.model);
    spec.hyperparameters = hp;
    spec.scheme = scheme;

    const Json empty = Json::object();
    detail::FieldReader run(run_section != nullptr ? *run_section : empty, "run");
    spec.repetitions = run.get_uint("repetitions").value_or(1);
    if (spec.repetitions < 1) {
        throw ConfigError("run.repetitions: must be >= 1");
    }
    spec.base_seed = run.get_uint("base_seed").value_or(hp.seed);
    if (const Json* out = run.raw("output"); out != nullptr && !out->is_null()) {
        cfg.run.output = run.get_string("output");
    }
    if (const auto format = run.get_string("format")) {
        try {
            cfg.run.format = parse_report_format(*format);
        } catch (const ConfigError& e) {
            throw ConfigError("run.format: " + std::string(e.what()));
        }
    }
    run.finish();
    return cfg;
}

Json parse_json_text(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + end, '\n'));
        std::string msg = e.what();
        if (const auto pos = msg.find("] "); pos != std::string::npos) {
            msg = msg.substr(pos + 2);
        }
        throw ParseError(line, "invalid JSON: " + msg);
    }
}

void apply_override(Json& doc, std::string_view assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw ConfigError("override '" + std::string(assignment) + "' must look like key.path=value");
    }
    const auto path = text::split(assignment.substr(0, eq), '.');
    const std::string raw_value(assignment.substr(eq + 1));

    Json value;
    try {
        value = Json::parse(raw_value);
    } catch (const Json::parse_error&) {
        value = raw_value;
    }

    if (!doc.is_object()) {
        throw ConfigError("config root must be an object");
    }
    Json* node = &doc;
    std::string walked;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const std::string key(path[i]);
        if (key.empty()) {
            throw ConfigError("override '" + std::string(assignment) + "' has an empty key segment");
        }
        walked += (walked.empty() ? "" : ".") + key;
        if (i + 1 == path.size()) {
            (*node)[key] = value;
            break;
        }
        Json& child = (*node)[key];
        if (child.is_null()) {
            child = Json::object();
        } else if (!child.is_object()) {
            throw ConfigError("override '" + std::string(assignment) + "': " + walked + " is not an object");
        }
        node = &child;
    }
}

Json spec_to_json(const ExperimentSpec& spec)
{
    Json model = Json::object();
    model["name"] = to_string(spec.model);
    for (const auto& [k, v] : spec.model_params.items()) {
        model[k] = v;
    }
    Json problem = Json::object();
    problem["name"] = spec.problem;
    for (const auto& [k, v] : spec.problem_params.items()) {
        problem[k] = v;
    }
    const Hyperparameters& hp = spec.hyperparameters;
    Json hyper = Json::object();
    hyper["population_size"] = hp.population_size;
    hyper["max_evaluations"] = hp.max_evaluations;
    hyper["mutation_rate"] = hp.mutation_rate;
    hyper["crossover_rate"] = hp.crossover_rate;
    hyper["tournament_size"] = hp.tournament_size;
    hyper["elitism"] = hp.elitism;
    hyper["mu"] = hp.mu;
    hyper["lambda"] = hp.lambda;
    hyper["seed"] = hp.seed;
    hyper["scheme"] = to_string(spec.scheme);

    Json doc = Json::object();
    doc["model"] = std::move(model);
    doc["problem"] = std::move(problem);
    doc["hyperparameters"] = std::move(hyper);
    doc["run"] = Json{{"repetitions", spec.repetitions}, {"base_seed", spec.base_seed}};
    return doc;
}

ExperimentSpec spec_from_json(const Json& doc)
{
    detail::FieldReader top(doc, "spec");
    const Json* model_section = top.raw("model");
    const Json* problem_section = top.raw("problem");
    const Json* hp_section = top.raw("hyperparameters");
    const Json* run_section = top.raw("run");
    top.finish();

    ExperimentSpec spec;
    std::string model_name;
    spec.model_params = split_named(model_section, "spec.model", model_name);
    spec.model = read_model_kind(model_name);
    spec.problem_params = split_named(problem_section, "spec.problem", spec.problem);
    auto [hp, scheme] = read_hyperparameters(hp_section, spec.model);
    spec.hyperparameters = hp;
    spec.scheme = scheme;

    if (run_section == nullptr) {
        throw ConfigError("spec.run: missing section");
    }
    detail::FieldReader run(*run_section, "spec.run");
    spec.repetitions = run.get_uint("repetitions").value_or(1);
    spec.base_seed = run.get_uint("base_seed").value_or(hp.seed);
    run.finish();
    return spec;
}

} // namespace crossgp::harness
