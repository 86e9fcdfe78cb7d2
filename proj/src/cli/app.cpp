#include "crossgp/cli/app.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crossgp/core/error.hpp"
#include "crossgp/core/text.hpp"
#include "crossgp/harness/catalogue.hpp"
#include "crossgp/harness/config.hpp"
#include "crossgp/harness/experiment.hpp"
#include "crossgp/harness/report.hpp"

namespace crossgp::cli {

namespace {

constexpr const char* workers_env = "CROSSGP_WORKERS";

struct Options {
    std::string domain;
    std::string config_path;
    std::vector<std::string> overrides;
    std::string output;
    std::string format;
    std::optional<std::size_t> workers;
    bool verbose = false;
};

std::size_t resolve_workers(const Options& opts)
{
    if (opts.workers) {
        if (*opts.workers < 1) {
            throw ConfigError("--workers must be >= 1");
        }
        return *opts.workers;
    }
    if (const char* env = std::getenv(workers_env); env != nullptr && *env != '\0') {
        const auto n = text::parse_uint(env);
        if (!n || *n < 1) {
            throw ConfigError(std::string(workers_env) + " must be a positive integer, got '" + env + "'");
        }
        return static_cast<std::size_t>(*n);
    }
    return 1;
}

harness::Config load(const Options& opts)
{
    harness::Json doc;
    try {
        doc = harness::parse_json_text(text::read_file(opts.config_path));
    } catch (const ParseError& e) {
        throw ParseError(e.line(), opts.config_path + ": " + std::string(e.what()));
    }
    for (const auto& o : opts.overrides) {
        harness::apply_override(doc, o);
    }
    harness::Config cfg = harness::parse_config(doc);
    if (!opts.output.empty()) {
        cfg.run.output = opts.output;
    }
    if (!opts.format.empty()) {
        cfg.run.format = harness::parse_report_format(opts.format);
    }
    return cfg;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream file(path, std::ios::binary);
    file << content;
    if (!file) {
        throw ConfigError("cannot write report to '" + path + "'");
    }
}

harness::RunOptions run_options(const Options& opts, const WorkerPool& pool, std::ostream& err, std::mutex& log_mutex)
{
    harness::RunOptions ro;
    ro.pool = &pool;
    if (opts.verbose) {
        ro.on_generation = [&err, &log_mutex](std::uint64_t seed, const GenerationLog& log) {
            const std::lock_guard lock(log_mutex);
            err << "seed=" << seed << " generation=" << log.generation << " evaluations=" << log.evaluations
                << " best_cost=" << text::format_double(log.best_cost) << '\n';
        };
    }
    return ro;
}

std::string aggregate_line(const harness::BenchmarkReport& report)
{
    const auto& a = report.aggregates;
    return "runs=" + std::to_string(report.runs.size()) + " success_rate=" + text::format_double(a.success_rate) +
           " median_best_cost=" + text::format_double(a.median_best_cost) + " median_evaluations_to_success=" +
           (a.median_evaluations_to_success ? text::format_double(*a.median_evaluations_to_success) : "null") +
           " median_wall_ms=" + text::format_double(a.median_wall_ms);
}

int cmd_list(const Options& opts, std::ostream& out)
{
    std::optional<harness::ProblemDomain> only;
    if (!opts.domain.empty()) {
        only = harness::parse_problem_domain(opts.domain);
        if (!only) {
            std::string valid;
            for (const auto d : harness::all_problem_domains()) {
                valid += (valid.empty() ? "" : ", ") + std::string(harness::to_string(d));
            }
            throw ConfigError("unknown domain '" + opts.domain + "' (valid: " + valid + ")");
        }
    }
    out << harness::list_catalogue(only);
    return 0;
}

int cmd_run(const Options& opts, std::ostream& out, std::ostream& err)
{
    harness::Config cfg = load(opts);
    cfg.spec.repetitions = 1;
    cfg.spec.base_seed = cfg.spec.hyperparameters.seed;
    const WorkerPool pool(resolve_workers(opts));
    std::mutex log_mutex;
    const harness::BenchmarkReport report =
        harness::run_experiment(cfg.spec, run_options(opts, pool, err, log_mutex));
    const harness::RunResult& run = report.runs.front();
    if (cfg.run.output) {
        write_file(*cfg.run.output, harness::write_report(report, cfg.run.format));
    }
    out << "best_expression: " << run.best_expression << '\n'
        << "best_cost: " << text::format_double(run.best_cost) << '\n'
        << "success: " << (run.success ? "true" : "false") << '\n'
        << "evaluations: " << run.evaluations_used << '\n';
    return run.success ? 0 : 1;
}

int cmd_bench(const Options& opts, std::ostream& out, std::ostream& err)
{
    const harness::Config cfg = load(opts);
    const WorkerPool pool(resolve_workers(opts));
    std::mutex log_mutex;
    const harness::BenchmarkReport report =
        harness::run_experiment(cfg.spec, run_options(opts, pool, err, log_mutex));
    const std::string text = harness::write_report(report, cfg.run.format);
    if (cfg.run.output) {
        write_file(*cfg.run.output, text);
        out << aggregate_line(report) << '\n';
    } else {
        out << text;
        err << aggregate_line(report) << '\n';
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cross-domain genetic programming: tree and graph GP on logic, regression and policy problems",
                 "crossgp"};
    app.require_subcommand(1);
    Options opts;

    auto* list = app.add_subcommand("list", "List registered problems and their parameters");
    list->add_option("--domain", opts.domain, "Only this domain (logic_synthesis, symbolic_regression, policy_search)");

    auto add_experiment_flags = [&](CLI::App* sub) {
        sub->add_option("--config", opts.config_path, "JSON config file")->required();
        sub->add_option("--set", opts.overrides, "Override a config value: key.path=value (repeatable)");
        sub->add_option("--output", opts.output, "Report file path");
        sub->add_option("--format", opts.format, "Report format: json or csv");
        sub->add_option("--workers", opts.workers,
                        std::string("Worker threads (default: $") + workers_env + " or 1)");
        sub->add_flag("-v,--verbose", opts.verbose, "Log one line per generation to stderr");
    };
    auto* run = app.add_subcommand("run", "Run one seeded search (exit 0 on success, 1 otherwise)");
    add_experiment_flags(run);
    auto* bench = app.add_subcommand("bench", "Run all repetitions and write a benchmark report");
    add_experiment_flags(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (list->parsed()) {
            return cmd_list(opts, out);
        }
        if (run->parsed()) {
            return cmd_run(opts, out, err);
        }
        return cmd_bench(opts, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

} // namespace crossgp::cli
