// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "crossgp/blackbox/dataset.hpp"
#include "crossgp/blackbox/generators.hpp"
#include "crossgp/blackbox/problem.hpp"
#include "crossgp/blackbox/truth_table.hpp"
#include "crossgp/cgp/model.hpp"
#include "crossgp/harness/catalogue.hpp"
#include "crossgp/harness/config.hpp"
#include "crossgp/harness/experiment.hpp"
#include "crossgp/harness/report.hpp"
#include "crossgp/policy/problem.hpp"
#include "crossgp/tgp/model.hpp"
#include "oracles.hpp"

using namespace crossgp;
using harness::Json;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

std::shared_ptr<const FunctionSet> share(FunctionSet fset)
{
    return std::make_shared<const FunctionSet>(std::move(fset));
}

const std::vector<std::string> boolean_names{"and", "or", "nand", "nor", "xor", "xnor", "not"};
const std::vector<std::string> real_names{"add", "sub", "mul", "div", "sin", "cos", "exp", "log", "sqrt"};

FunctionSet random_subset(Domain domain, const std::vector<std::string>& names, Rng& rng)
{
    std::vector<std::string> picked;
    for (const auto& n : names) {
        if (rng.bernoulli(0.5)) {
            picked.push_back(n);
        }
    }
    // Keep at least one binary function so trees and graphs can grow.
    if (picked.empty() || std::all_of(picked.begin(), picked.end(), [](const auto& n) { return n == "not"; })) {
        picked.push_back(names.front());
    }
    return FunctionSet::from_names(domain, picked);
}

cgp::CgpConfig random_cgp_config(std::size_t n_inputs, std::size_t n_outputs, const FunctionSet& fset, Rng& rng)
{
    cgp::CgpConfig cfg;
    cfg.n_inputs = n_inputs;
    cfg.n_outputs = n_outputs;
    cfg.n_columns = 1 + rng.below(30);
    cfg.n_rows = 1 + rng.below(3);
    cfg.levels_back = 1 + rng.below(cfg.n_columns);
    cfg.max_arity = fset.max_arity();
    return cfg;
}

tgp::TgpConfig random_tgp_config(std::size_t n_inputs, std::size_t n_outputs, Rng& rng)
{
    tgp::TgpConfig cfg;
    cfg.n_inputs = n_inputs;
    cfg.n_outputs = n_outputs;
    cfg.max_depth = 1 + rng.below(10);
    cfg.init_min_depth = rng.below(cfg.max_depth + 1);
    cfg.init_max_depth = cfg.init_min_depth + rng.below(cfg.max_depth - cfg.init_min_depth + 1);
    cfg.mutation_max_depth = rng.below(5);
    cfg.constant_probability = rng.uniform01();
    cfg.boolean_constants = rng.bernoulli(0.5);
    return cfg;
}

std::size_t words_for(std::size_t n_inputs)
{
    return ((std::size_t{1} << n_inputs) + 63) / 64;
}

// AC1: active-set evaluation against the full-graph interpreter.
Verdict cgp_oracle_equivalence()
{
    Rng rng = derive_rng(101, 0);
    std::size_t genomes = 0;
    std::size_t mismatches = 0;
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto patterns = input_patterns(n);
        const std::size_t words = words_for(n);
        for (int i = 0; i < 1000; ++i, ++genomes) {
            const auto fset = share(random_subset(Domain::Boolean, boolean_names, rng));
            const auto cfg = random_cgp_config(n, 1 + rng.below(3), *fset, rng);
            const auto g = cgp::init_random_cgp(cfg, *fset, rng);
            const cgp::GraphProgram program(g, cfg, fset);
            std::vector<std::uint64_t> packed(cfg.n_outputs * words);
            program.evaluate_packed(patterns, words, packed);
            bool ok = true;
            for (std::size_t row = 0; row < (std::size_t{1} << n); ++row) {
                const auto bits = oracle::row_bits(row, n);
                const auto want = oracle::cgp_full_graph(g, cfg, *fset, bits);
                std::vector<double> in(bits.begin(), bits.end());
                const auto got = cgp::evaluate_cgp(g, cfg, *fset, in);
                for (std::size_t o = 0; o < cfg.n_outputs; ++o) {
                    const bool packed_bit = ((packed[o * words + row / 64] >> (row % 64)) & 1U) != 0;
                    ok = ok && (got[o] != 0.0) == want[o] && packed_bit == want[o];
                }
            }
            mismatches += ok ? 0 : 1;
        }
    }
    return {mismatches == 0, fmt("%zu genomes over n=2..8, %zu mismatches", genomes, mismatches)};
}

TruthTable random_table(std::size_t n, std::size_t m, Rng& rng)
{
    TruthTable t("random", n, m);
    for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t o = 0; o < m; ++o) {
            t.set(r, o, rng.bernoulli(0.5));
        }
    }
    return t;
}

// AC2: packed Hamming fitness against row-at-a-time evaluation.
Verdict bit_parallel_equivalence()
{
    Rng rng = derive_rng(102, 0);
    std::size_t programs = 0;
    std::size_t mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + rng.below(10);
        const std::size_t m = 1 + rng.below(3);
        const auto table = random_table(n, m, rng);
        const auto fset = random_subset(Domain::Boolean, boolean_names, rng);

        const tgp::TgpModel tree_model(random_tgp_config(n, m, rng), fset);
        const auto tree = tree_model.decode(tree_model.initialize(1, rng).front());
        const cgp::CgpModel graph_model(random_cgp_config(n, m, fset, rng), fset);
        const auto graph = graph_model.decode(graph_model.initialize(1, rng).front());
        for (const Program* p : {tree.get(), graph.get()}) {
            ++programs;
            if (fitness_logic(*p, table) != static_cast<double>(oracle::hamming_rowwise(*p, table))) {
                ++mismatches;
            }
        }
    }
    return {mismatches == 0, fmt("%zu programs (tgp and cgp), n<=10, %zu mismatches", programs, mismatches)};
}

// AC3: variation operators keep genomes structurally valid.
Verdict operator_validity()
{
    Rng rng = derive_rng(103, 0);
    std::size_t invalid = 0;
    std::size_t crossovers = 0;
    std::size_t mutations = 0;
    std::size_t point_mutations = 0;
    std::string first_problem;
    const auto note = [&](const std::optional<std::string>& problem) {
        if (problem) {
            ++invalid;
            if (first_problem.empty()) {
                first_problem = *problem;
            }
        }
    };
    while (crossovers < 10000) {
        const std::size_t n = 1 + rng.below(5);
        const std::size_t m = 1 + rng.below(3);
        const auto fset = random_subset(Domain::Real, real_names, rng);
        const auto cfg = random_tgp_config(n, m, rng);
        std::vector<tgp::TreeForest> pool;
        for (int i = 0; i < 8; ++i) {
            pool.push_back(tgp::init_ramped(cfg, fset, cfg.init_min_depth, cfg.init_max_depth, rng));
        }
        for (int k = 0; k < 100; ++k) {
            auto& a = pool[rng.below(pool.size())];
            const auto& b = pool[rng.below(pool.size())];
            auto child = tgp::subtree_crossover(a, b, cfg, rng);
            note(tgp::check_forest(child, fset, n, m));
            ++crossovers;
            auto mutant = tgp::subtree_mutation(child, fset, cfg, rng);
            note(tgp::check_forest(mutant, fset, n, m));
            ++mutations;
            a = std::move(mutant);
        }
    }
    while (point_mutations < 10000) {
        const auto fset = random_subset(Domain::Boolean, boolean_names, rng);
        const auto cfg = random_cgp_config(1 + rng.below(6), 1 + rng.below(3), fset, rng);
        auto g = cgp::init_random_cgp(cfg, fset, rng);
        note(cgp::check_genome(g, cfg, fset));
        for (int k = 0; k < 100; ++k, ++point_mutations) {
            g = cgp::point_mutation(g, cfg, fset, rng.uniform01(), rng);
            note(cgp::check_genome(g, cfg, fset));
        }
    }
    return {invalid == 0, fmt("%zu crossovers, %zu subtree mutations, %zu point mutations, %zu invalid%s%s",
                              crossovers, mutations, point_mutations, invalid, first_problem.empty() ? "" : ": ",
                              first_problem.c_str())};
}

// AC4: generated tables against per-row arithmetic.
Verdict generator_correctness()
{
    struct Case {
        BooleanFamily family;
        std::size_t size;
        std::function<std::vector<bool>(const std::vector<bool>&)> row;
    };
    std::vector<Case> cases;
    for (std::size_t n = 1; n <= 2; ++n) {
        cases.push_back({BooleanFamily::Adder, n, [n](const auto& x) { return oracle::adder_row(n, x); }});
        cases.push_back({BooleanFamily::Multiplier, n, [n](const auto& x) { return oracle::multiplier_row(n, x); }});
    }
    for (std::size_t n = 2; n <= 8; ++n) {
        cases.push_back({BooleanFamily::Parity, n, [](const auto& x) { return oracle::parity_row(x); }});
    }
    for (std::size_t n = 1; n <= 3; ++n) {
        cases.push_back({BooleanFamily::Comparator, n, [n](const auto& x) { return oracle::comparator_row(n, x); }});
        cases.push_back({BooleanFamily::Multiplexer, n, [n](const auto& x) { return oracle::multiplexer_row(n, x); }});
    }
    for (const std::size_t n : {3, 5, 7}) {
        cases.push_back({BooleanFamily::Majority, n, [](const auto& x) { return oracle::majority_row(x); }});
    }
    std::size_t rows = 0;
    std::string failures;
    for (const auto& c : cases) {
        const auto table = gen_boolean(c.family, c.size);
        bool ok = true;
        for (std::size_t r = 0; r < table.rows(); ++r, ++rows) {
            const auto want = c.row(oracle::row_bits(r, table.n_inputs()));
            ok = ok && want.size() == table.n_outputs();
            for (std::size_t o = 0; ok && o < want.size(); ++o) {
                ok = table.get(r, o) == want[o];
            }
        }
        if (!ok) {
            failures += fmt(" %s(%zu)", std::string(to_string(c.family)).c_str(), c.size);
        }
    }
    return {failures.empty(), fmt("%zu tables, %zu rows checked", cases.size(), rows) +
                                  (failures.empty() ? "" : ", wrong:" + failures)};
}

harness::ExperimentSpec spec_of(const char* text)
{
    return harness::parse_config(Json::parse(text)).spec;
}

const char* const determinism_configs[] = {
    R"({"model": {"name": "cgp", "columns": 40}, "problem": {"name": "parity", "size": 3},
        "hyperparameters": {"max_evaluations": 3000}, "run": {"repetitions": 3, "base_seed": 11}})",
    R"({"model": {"name": "tgp"}, "problem": {"name": "koza1"},
        "hyperparameters": {"population_size": 60, "max_evaluations": 1200}, "run": {"repetitions": 3}})",
    R"({"model": {"name": "tgp"}, "problem": {"name": "adder", "size": 1},
        "hyperparameters": {"population_size": 40, "max_evaluations": 800}, "run": {"repetitions": 2}})",
    R"({"model": {"name": "tgp"}, "problem": {"name": "cartpole", "episodes": 3},
        "hyperparameters": {"population_size": 20, "max_evaluations": 200}, "run": {"repetitions": 2}})",
    R"({"model": {"name": "cgp", "columns": 20}, "problem": {"name": "gridworld"},
        "hyperparameters": {"max_evaluations": 400}, "run": {"repetitions": 2}})",
};

// AC5: identical reports for 1 and 4 workers.
Verdict determinism()
{
    const WorkerPool one(1);
    const WorkerPool four(4);
    std::size_t runs = 0;
    std::size_t differing = 0;
    for (const char* text : determinism_configs) {
        const auto spec = spec_of(text);
        harness::RunOptions a;
        a.pool = &one;
        harness::RunOptions b;
        b.pool = &four;
        const auto ra = harness::write_report(harness::without_wall_time(harness::run_experiment(spec, a)),
                                              harness::ReportFormat::Json);
        const auto rb = harness::write_report(harness::without_wall_time(harness::run_experiment(spec, b)),
                                              harness::ReportFormat::Json);
        runs += spec.repetitions;
        differing += ra == rb ? 0 : 1;
    }
    return {differing == 0, fmt("%zu configs, %zu runs, %zu differing reports", std::size(determinism_configs), runs,
                                differing)};
}

// AC6: best cost never rises along a trajectory.
Verdict monotone_trajectories()
{
    const char* const problems[] = {
        R"({"name": "parity", "size": 3})",       R"({"name": "multiplexer", "size": 1})",
        R"({"name": "majority", "size": 3})",     R"({"name": "koza1"})",
        R"({"name": "nguyen5", "count": 15})",   R"({"name": "koza3"})",
        R"({"name": "cartpole", "episodes": 2})", R"({"name": "gridworld:4x4:3,3"})",
        R"({"name": "gridworld:3x2:2,1"})",
    };
    Rng rng = derive_rng(106, 0);
    std::size_t violations = 0;
    std::size_t points = 0;
    for (std::size_t i = 0; i < 100; ++i) {
        const std::size_t domain = i % 3;
        Json doc;
        doc["problem"] = Json::parse(problems[domain * 3 + rng.below(3)]);
        const bool graph = rng.bernoulli(0.5);
        doc["model"] = graph ? Json{{"name", "cgp"}, {"columns", 1 + rng.below(40)}} : Json{{"name", "tgp"}};
        doc["hyperparameters"] = Json{{"max_evaluations", 100 + rng.below(600)},
                                      {"population_size", 2 + rng.below(30)},
                                      {"elitism", 1 + rng.below(2)}};
        if (!graph && rng.bernoulli(0.3)) {
            doc["hyperparameters"]["scheme"] = "one_plus_lambda";
        }
        const auto spec = harness::parse_config(doc).spec;
        const auto run = harness::run_single(spec, 1000 + i);
        points += run.trajectory.size();
        for (std::size_t t = 1; t < run.trajectory.size(); ++t) {
            violations += run.trajectory[t].best_cost > run.trajectory[t - 1].best_cost ? 1 : 0;
        }
        violations += run.trajectory.empty() ? 1 : 0;
    }
    return {violations == 0, fmt("100 runs, %zu trajectory points, %zu increases", points, violations)};
}

harness::BenchmarkReport bench(const Json& doc, const WorkerPool& pool)
{
    harness::RunOptions opts;
    opts.pool = &pool;
    return harness::run_experiment(harness::parse_config(doc).spec, opts);
}

std::size_t count_runs(const harness::BenchmarkReport& report, const std::function<bool(const harness::RunResult&)>& f)
{
    return static_cast<std::size_t>(std::count_if(report.runs.begin(), report.runs.end(), f));
}

std::size_t hardware_workers()
{
    return std::max(1U, std::thread::hardware_concurrency());
}

// AC7: CGP (1+4) on parity-3 and the 2-address multiplexer.
Verdict logic_smoke()
{
    const WorkerPool pool(hardware_workers());
    std::string detail;
    bool pass = true;
    for (const auto& [problem, size] : {std::pair{"parity", 3}, std::pair{"multiplexer", 2}}) {
        const Json doc = {
            {"model", {{"name", "cgp"}, {"functions", {"and", "or", "nand", "nor"}}, {"columns", 100}, {"rows", 1},
                       {"levels_back", 100}}},
            {"problem", {{"name", problem}, {"size", size}}},
            {"hyperparameters", {{"scheme", "one_plus_lambda"}, {"mu", 1}, {"lambda", 4}, {"mutation_rate", 0.05},
                                 {"max_evaluations", 200000}}},
            {"run", {{"repetitions", 10}, {"base_seed", 1}}},
        };
        const auto report = bench(doc, pool);
        const auto solved = count_runs(report, [](const auto& r) { return r.best_cost == 0.0; });
        pass = pass && solved >= 5;
        detail += fmt("%s%s(%d) solved %zu/10", detail.empty() ? "" : ", ", problem, size, solved);
    }
    return {pass, detail + " (need >= 5 each)"};
}

// AC8: TGP on Koza1.
Verdict regression_smoke()
{
    const WorkerPool pool(hardware_workers());
    const Json doc = {
        {"model", {{"name", "tgp"}}},
        {"problem", {{"name", "koza1"}, {"lo", -1.0}, {"hi", 1.0}, {"count", 20}}},
        {"hyperparameters", {{"population_size", 500}, {"max_evaluations", 100000}}},
        {"run", {{"repetitions", 10}, {"base_seed", 1}}},
    };
    const auto report = bench(doc, pool);
    const auto close = count_runs(report, [](const auto& r) { return r.best_cost < 0.1; });
    const auto exact = count_runs(report, [](const auto& r) { return r.best_cost < 1e-10; });
    return {close >= 5 && exact >= 1,
            fmt("MSE < 0.1 in %zu/10 (need 5), exact in %zu/10 (need 1)", close, exact)};
}

// AC9: gridworld optimum through evolution, cart-pole through a fixed controller.
Verdict policy_smoke()
{
    const WorkerPool pool(hardware_workers());
    const double optimum = -static_cast<double>(oracle::grid_bfs_distance(5, 5, 0, 0, 4, 4));
    const Json doc = {
        {"model", {{"name", "tgp"}}},
        {"problem", {{"name", "gridworld"}, {"width", 5}, {"height", 5}, {"goal_x", 4}, {"goal_y", 4},
                     {"target_return", optimum}}},
        {"hyperparameters", {{"max_evaluations", 50000}}},
        {"run", {{"repetitions", 10}, {"base_seed", 1}}},
    };
    const auto report = bench(doc, pool);
    const auto optimal = count_runs(report, [](const auto& r) { return r.best_cost == 0.0; });

    const auto cart = harness::resolve_problem("cartpole", Json::object());
    const auto& problem = dynamic_cast<const policy::PolicyProblem&>(*cart.problem);
    const auto fset = FunctionSet::default_real();
    const tgp::TgpModel model({4, 1}, fset);
    // Push toward the side the pole is falling: sign(theta + theta_dot).
    const auto controller =
        model.decode({{{tgp::Node::function(fset[0]), tgp::Node::input(2), tgp::Node::input(3)}}, 12});
    const double mean = problem.mean_return(*controller);
    const auto max_steps = cart.params["max_steps"].get<double>();
    return {optimal >= 8 && mean == max_steps,
            fmt("gridworld 5x5 optimum %.0f reached in %zu/10 (need 8); cart-pole bang-bang mean return %.1f "
                "over %d episodes (need %.0f)",
                optimum, optimal, mean, cart.params["episodes"].get<int>(), max_steps)};
}

// AC10: discounted return against the closed-form geometric sum.
Verdict discounted_return()
{
    double worst = 0.0;
    std::size_t cases = 0;
    for (const double gamma : {0.5, 0.9, 0.99}) {
        for (const double reward : {1.0, -0.5, 3.25}) {
            oracle::ConstantRewardEnv env(reward, 50);
            const oracle::ConstantProgram program(1, {1.0});
            const policy::Agent agent(program, env.action_space());
            policy::EpisodeConfig cfg;
            cfg.episodes = 1;
            cfg.gamma = gamma;
            cfg.max_steps = 50;
            const double closed = reward * gamma * (1.0 - std::pow(gamma, 50)) / (1.0 - gamma);
            worst = std::max(worst, std::fabs(policy::rollout(agent, env, cfg) - closed));
            ++cases;
        }
    }
    return {worst <= 1e-12, fmt("%zu cases, max abs error %.3g", cases, worst)};
}

std::string random_name(Rng& rng)
{
    static const char alphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789_-";
    std::string s(1 + rng.below(12), 'a');
    for (auto& c : s) {
        c = alphabet[rng.below(sizeof alphabet - 1)];
    }
    return s;
}

double random_real(Rng& rng)
{
    switch (rng.below(6)) {
    case 0:
        return 0.0;
    case 1:
        return static_cast<double>(rng.between(-1000, 1000));
    case 2:
        return rng.uniform(-1.0, 1.0);
    case 3:
        return std::ldexp(rng.uniform(-1.0, 1.0), static_cast<int>(rng.between(-1060, 1020)));
    case 4:
        return rng.uniform(-1e6, 1e6);
    default:
        return 1.0 / 3.0 * static_cast<double>(rng.between(-9, 9));
    }
}

harness::BenchmarkReport random_report(Rng& rng)
{
    static const char* const configs[] = {
        R"({"model": {"name": "cgp"}, "problem": {"name": "parity"}})",
        R"({"model": {"name": "tgp", "functions": ["add", "mul", "sin"]}, "problem": {"name": "koza2", "count": 5}})",
        R"({"model": {"name": "tgp"}, "problem": {"name": "cartpole", "target_return": null}})",
        R"({"model": {"name": "cgp", "columns": 7}, "problem": {"name": "gridworld:3x3:1,2"}})",
    };
    Json doc = Json::parse(configs[rng.below(std::size(configs))]);
    doc["hyperparameters"] = Json{{"population_size", 1 + rng.below(1000)},
                                  {"max_evaluations", 1 + rng.below(1000000)},
                                  {"mutation_rate", rng.uniform01()},
                                  {"crossover_rate", rng.uniform01()},
                                  {"seed", rng.next()}};
    doc["run"] = Json{{"repetitions", 1 + rng.below(5)}, {"base_seed", rng.next()}};
    harness::BenchmarkReport report;
    report.spec = harness::parse_config(doc).spec;
    for (std::size_t i = 0; i < report.spec.repetitions; ++i) {
        harness::RunResult r;
        r.seed = report.spec.base_seed + i;
        r.best_cost = std::fabs(random_real(rng));
        r.success = rng.bernoulli(0.5);
        r.evaluations_used = rng.below(2000000);
        if (r.success) {
            r.evaluations_to_success = rng.below(r.evaluations_used + 1);
        }
        r.best_expression = "(add x0 " + random_name(rng) + ")";
        for (std::size_t t = rng.below(6); t > 0; --t) {
            r.trajectory.push_back({rng.below(100000), std::fabs(random_real(rng))});
        }
        r.wall_ms = rng.uniform(0.0, 1e5);
        report.runs.push_back(std::move(r));
    }
    report.aggregates = harness::aggregate(report.runs);
    return report;
}

// AC11: load(save(x)) == x for truth tables, datasets and reports.
Verdict serialization_round_trips()
{
    Rng rng = derive_rng(111, 0);
    std::size_t tables = 0;
    std::size_t datasets = 0;
    std::size_t reports = 0;
    for (int i = 0; i < 1000; ++i) {
        auto table = random_table(1 + rng.below(10), 1 + rng.below(4), rng);
        table.set_name(random_name(rng));
        tables += load_truth_table(save_truth_table(table)) == table ? 1 : 0;

        const std::size_t n = 1 + rng.below(4);
        const std::size_t m = 1 + rng.below(2);
        const std::size_t rows = 1 + rng.below(30);
        std::vector<double> x(rows * n);
        std::vector<double> y(rows * m);
        for (auto& v : x) {
            v = random_real(rng);
        }
        for (auto& v : y) {
            v = random_real(rng);
        }
        const Dataset data(random_name(rng), n, m, std::move(x), std::move(y));
        datasets += load_dataset_csv(save_dataset_csv(data)) == data ? 1 : 0;

        const auto report = random_report(rng);
        reports +=
            harness::load_report_json(harness::write_report(report, harness::ReportFormat::Json)) == report ? 1 : 0;
    }
    return {tables == 1000 && datasets == 1000 && reports == 1000,
            fmt("identity for %zu/1000 truth tables, %zu/1000 datasets, %zu/1000 reports", tables, datasets,
                reports)};
}

} // namespace

int main()
{
    const std::pair<const char*, Verdict (*)()> criteria[] = {
        {"AC1 ", cgp_oracle_equivalence},   {"AC2 ", bit_parallel_equivalence},
        {"AC3 ", operator_validity},        {"AC4 ", generator_correctness},
        {"AC5 ", determinism},              {"AC6 ", monotone_trajectories},
        {"AC7 ", logic_smoke},              {"AC8 ", regression_smoke},
        {"AC9 ", policy_smoke},             {"AC10", discounted_return},
        {"AC11", serialization_round_trips},
    };
    int failed = 0;
    for (const auto& [id, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << id << ' ' << (v.pass ? "PASS" : "FAIL") << "  " << v.detail << fmt(" [%.1fs]", secs)
                  << std::endl;
        failed += v.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
