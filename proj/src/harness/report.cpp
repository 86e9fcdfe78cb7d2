#include "crossgp/harness/report.hpp"

#include <sstream>

#include "crossgp/core/error.hpp"
#include "crossgp/core/text.hpp"
#include "fields.hpp"

namespace crossgp::harness {

namespace {

Json optional_number(const std::optional<double>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json run_to_json(const RunResult& r)
{
    Json trajectory = Json::array();
    for (const auto& p : r.trajectory) {
        trajectory.push_back(Json{{"generation", p.generation}, {"best_cost", p.best_cost}});
    }
    Json j = Json::object();
    j["seed"] = r.seed;
    j["best_cost"] = r.best_cost;
    j["success"] = r.success;
    j["evaluations_used"] = r.evaluations_used;
    j["evaluations_to_success"] = r.evaluations_to_success ? Json(*r.evaluations_to_success) : Json(nullptr);
    j["best_expression"] = r.best_expression;
    j["trajectory"] = std::move(trajectory);
    j["wall_ms"] = r.wall_ms;
    return j;
}

double require_real(detail::FieldReader& r, const std::string& key)
{
    const auto v = r.get_real(key);
    if (!v) {
        throw ConfigError(r.field(key) + ": missing");
    }
    return *v;
}

std::uint64_t require_uint(detail::FieldReader& r, const std::string& key)
{
    const auto v = r.get_uint(key);
    if (!v) {
        throw ConfigError(r.field(key) + ": missing");
    }
    return *v;
}

RunResult run_from_json(const Json& j, const std::string& path)
{
    detail::FieldReader r(j, path);
    RunResult out;
    out.seed = require_uint(r, "seed");
    out.best_cost = require_real(r, "best_cost");
    out.success = r.get_bool("success").value_or(false);
    out.evaluations_used = require_uint(r, "evaluations_used");
    if (const Json* v = r.raw("evaluations_to_success"); v != nullptr && !v->is_null()) {
        out.evaluations_to_success = r.get_uint("evaluations_to_success");
    }
    out.best_expression = r.get_string("best_expression").value_or("");
    if (const Json* t = r.raw("trajectory"); t != nullptr) {
        if (!t->is_array()) {
            throw ConfigError(r.field("trajectory") + ": expected an array");
        }
        for (std::size_t i = 0; i < t->size(); ++i) {
            detail::FieldReader p((*t)[i], r.field("trajectory") + "[" + std::to_string(i) + "]");
            out.trajectory.push_back({require_uint(p, "generation"), require_real(p, "best_cost")});
            p.finish();
        }
    }
    out.wall_ms = r.get_real("wall_ms").value_or(0.0);
    r.finish();
    return out;
}

std::string csv_number(std::optional<double> v)
{
    return v ? text::format_double(*v) : "null";
}

} // namespace

Json report_to_json(const BenchmarkReport& report)
{
    Json runs = Json::array();
    for (const auto& r : report.runs) {
        runs.push_back(run_to_json(r));
    }
    const Aggregates& a = report.aggregates;
    Json agg = Json::object();
    agg["success_rate"] = a.success_rate;
    agg["median_best_cost"] = a.median_best_cost;
    agg["median_evaluations_to_success"] = optional_number(a.median_evaluations_to_success);
    agg["median_wall_ms"] = a.median_wall_ms;

    Json doc = Json::object();
    doc["spec"] = spec_to_json(report.spec);
    doc["runs"] = std::move(runs);
    doc["aggregates"] = std::move(agg);
    return doc;
}

BenchmarkReport report_from_json(const Json& doc)
{
    detail::FieldReader top(doc, "report");
    BenchmarkReport out;
    const Json* spec = top.raw("spec");
    if (spec == nullptr) {
        throw ConfigError("report.spec: missing");
    }
    out.spec = spec_from_json(*spec);

    const Json* runs = top.raw("runs");
    if (runs == nullptr || !runs->is_array()) {
        throw ConfigError("report.runs: expected an array");
    }
    for (std::size_t i = 0; i < runs->size(); ++i) {
        out.runs.push_back(run_from_json((*runs)[i], "report.runs[" + std::to_string(i) + "]"));
    }

    const Json* agg = top.raw("aggregates");
    if (agg == nullptr) {
        throw ConfigError("report.aggregates: missing");
    }
    detail::FieldReader a(*agg, "report.aggregates");
    out.aggregates.success_rate = require_real(a, "success_rate");
    out.aggregates.median_best_cost = require_real(a, "median_best_cost");
    if (const Json* v = a.raw("median_evaluations_to_success"); v != nullptr && !v->is_null()) {
        out.aggregates.median_evaluations_to_success = a.get_real("median_evaluations_to_success");
    }
    out.aggregates.median_wall_ms = a.get_real("median_wall_ms").value_or(0.0);
    a.finish();
    top.finish();
    return out;
}

std::string write_report(const BenchmarkReport& report, ReportFormat format)
{
    if (format == ReportFormat::Json) {
        return report_to_json(report).dump(2) + "\n";
    }
    std::ostringstream out;
    out << "seed,best_cost,success,evaluations,wall_ms\n";
    for (const auto& r : report.runs) {
        out << r.seed << ',' << text::format_double(r.best_cost) << ',' << (r.success ? "true" : "false") << ','
            << r.evaluations_used << ',' << text::format_double(r.wall_ms) << '\n';
    }
    const Aggregates& a = report.aggregates;
    out << "# aggregate: success_rate=" << text::format_double(a.success_rate)
        << " median_best_cost=" << text::format_double(a.median_best_cost)
        << " median_evaluations_to_success=" << csv_number(a.median_evaluations_to_success)
        << " median_wall_ms=" << text::format_double(a.median_wall_ms) << '\n';
    return out.str();
}

BenchmarkReport load_report_json(std::string_view text)
{
    return report_from_json(parse_json_text(text));
}

BenchmarkReport without_wall_time(BenchmarkReport report)
{
    for (auto& r : report.runs) {
        r.wall_ms = 0.0;
    }
    report.aggregates.median_wall_ms = 0.0;
    return report;
}

} // namespace crossgp::harness
