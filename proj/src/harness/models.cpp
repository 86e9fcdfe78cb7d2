#include "models.hpp"

#include "crossgp/core/error.hpp"
#include "fields.hpp"

namespace crossgp::harness::detail {

namespace {

FunctionSet read_functions(FieldReader& r, Domain domain, Json& params)
{
    const auto names = r.get_strings("functions");
    FunctionSet fset = [&] {
        try {
            return names ? FunctionSet::from_names(domain, *names) : FunctionSet::default_for(domain);
        } catch (const ConfigError& e) {
            throw ConfigError(r.field("functions") + ": " + e.what());
        }
    }();
    params["functions"] = fset.names();
    return fset;
}

template <class F>
auto with_field_prefix(const std::string& prefix, F&& f)
{
    try {
        return f();
    } catch (const ConfigError& e) {
        throw ConfigError(prefix + ": " + e.what());
    }
}

} // namespace

BuiltModel build_model(ModelKind kind, const Json& params, const Problem& problem)
{
    FieldReader r(params, "model");
    BuiltModel out;
    out.params = Json::object();
    FunctionSet fset = read_functions(r, problem.domain(), out.params);

    if (kind == ModelKind::Tgp) {
        tgp::TgpConfig cfg;
        cfg.n_inputs = problem.n_inputs();
        cfg.n_outputs = problem.n_outputs();
        cfg.max_depth = r.get_uint("max_depth").value_or(cfg.max_depth);
        cfg.init_min_depth = r.get_uint("init_min_depth").value_or(cfg.init_min_depth);
        cfg.init_max_depth = r.get_uint("init_max_depth").value_or(cfg.init_max_depth);
        cfg.mutation_max_depth = r.get_uint("mutation_max_depth").value_or(cfg.mutation_max_depth);
        cfg.constant_probability = r.get_real("constant_probability").value_or(cfg.constant_probability);
        cfg.boolean_constants = r.get_bool("boolean_constants").value_or(cfg.boolean_constants);
        cfg.crossover_retries = r.get_uint("crossover_retries").value_or(cfg.crossover_retries);
        r.finish();
        out.params["max_depth"] = cfg.max_depth;
        out.params["init_min_depth"] = cfg.init_min_depth;
        out.params["init_max_depth"] = cfg.init_max_depth;
        out.params["mutation_max_depth"] = cfg.mutation_max_depth;
        out.params["constant_probability"] = cfg.constant_probability;
        out.params["boolean_constants"] = cfg.boolean_constants;
        out.params["crossover_retries"] = cfg.crossover_retries;
        out.tgp = with_field_prefix("model", [&] { return std::make_unique<tgp::TgpModel>(cfg, std::move(fset)); });
    } else {
        cgp::CgpConfig cfg;
        cfg.n_inputs = problem.n_inputs();
        cfg.n_outputs = problem.n_outputs();
        cfg.n_columns = r.get_uint("columns").value_or(cfg.n_columns);
        cfg.n_rows = r.get_uint("rows").value_or(cfg.n_rows);
        cfg.levels_back = r.get_uint("levels_back").value_or(cfg.n_columns);
        r.finish();
        out.params["columns"] = cfg.n_columns;
        out.params["rows"] = cfg.n_rows;
        out.params["levels_back"] = cfg.levels_back;
        out.cgp = with_field_prefix("model", [&] { return std::make_unique<cgp::CgpModel>(cfg, std::move(fset)); });
    }
    return out;
}

} // namespace crossgp::harness::detail
