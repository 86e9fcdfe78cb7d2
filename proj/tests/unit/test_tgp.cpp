#include <doctest.h>

#include <algorithm>

#include "crossgp/blackbox/truth_table.hpp"
#include "crossgp/core/error.hpp"
#include "crossgp/tgp/model.hpp"
#include "crossgp/tgp/tree.hpp"
#include "oracles.hpp"

using namespace crossgp;
using namespace crossgp::tgp;

namespace {

const FunctionSet& real_set()
{
    static const FunctionSet fset = FunctionSet::default_real();
    return fset;
}

const FunctionSet& bool_set()
{
    static const FunctionSet fset = FunctionSet::default_boolean();
    return fset;
}

Node fn(const FunctionSet& fset, const std::string& name)
{
    for (const auto& p : fset.primitives()) {
        if (p.name == name) {
            return Node::function(p);
        }
    }
    throw std::invalid_argument(name);
}

// Independent depth computation from explicit recursion.
std::size_t depth_of(const Tree& t, std::size_t& pos)
{
    const Node& n = t.at(pos++);
    std::size_t d = 0;
    for (std::uint32_t c = 0; c < n.arity; ++c) {
        d = std::max(d, 1 + depth_of(t, pos));
    }
    return d;
}

std::size_t depth_of(const Tree& t)
{
    std::size_t pos = 0;
    return depth_of(t, pos);
}

// Depth of every leaf, for the full-method check.
void leaf_depths(const Tree& t, std::size_t& pos, std::size_t depth, std::vector<std::size_t>& out)
{
    const Node& n = t.at(pos++);
    if (n.arity == 0) {
        out.push_back(depth);
    }
    for (std::uint32_t c = 0; c < n.arity; ++c) {
        leaf_depths(t, pos, depth + 1, out);
    }
}

TgpConfig config(std::size_t n_inputs, std::size_t n_outputs, std::size_t max_depth = 12)
{
    TgpConfig cfg;
    cfg.n_inputs = n_inputs;
    cfg.n_outputs = n_outputs;
    cfg.max_depth = max_depth;
    return cfg;
}

} // namespace

TEST_SUITE("tgp init") {

TEST_CASE("depth 0 gives single terminals")
{
    Rng rng = derive_rng(1, 0);
    auto cfg = config(3, 2);
    for (int i = 0; i < 100; ++i) {
        const auto f = init_ramped(cfg, real_set(), 0, 0, rng);
        for (const auto& t : f.trees) {
            CHECK(t.size() == 1);
        }
    }
}

TEST_CASE("full binary tree of depth 2 has 7 nodes and all leaves at depth 2")
{
    Rng rng = derive_rng(2, 0);
    auto cfg = config(2, 1);
    for (int i = 0; i < 100; ++i) {
        const auto f = init_ramped(cfg, real_set(), 2, 2, rng, InitMethod::Full);
        CHECK(f.trees[0].size() == 7);
        std::vector<std::size_t> leaves;
        std::size_t pos = 0;
        leaf_depths(f.trees[0], pos, 0, leaves);
        CHECK(std::all_of(leaves.begin(), leaves.end(), [](std::size_t d) { return d == 2; }));
        const auto m = forest_metrics(f);
        CHECK(m.depth == 2);
        CHECK(m.node_count == 7);
    }
}

TEST_CASE("no tree exceeds the ramp maximum")
{
    Rng rng = derive_rng(3, 0);
    auto cfg = config(4, 1);
    for (int i = 0; i < 10000; ++i) {
        const auto f = init_ramped(cfg, real_set(), 1, 6, rng);
        REQUIRE(depth_of(f.trees[0]) <= 6);
        REQUIRE_FALSE(check_forest(f, real_set(), 4, 1).has_value());
    }
}

TEST_CASE("model alternates grow and full")
{
    auto cfg = config(2, 1);
    cfg.init_min_depth = 3;
    cfg.init_max_depth = 3;
    const TgpModel model(cfg, real_set());
    Rng rng = derive_rng(4, 0);
    const auto pop = model.initialize(20, rng);
    for (std::size_t i = 1; i < pop.size(); i += 2) {
        CHECK(pop[i].trees[0].size() == 15);
    }
}

TEST_CASE("deep targets need a function of arity >= 1")
{
    const FunctionSet only_one(Domain::Real,
                               {Primitive{0, "one", 0, Domain::Real, [](std::span<const double>) { return 1.0; },
                                          nullptr}});
    auto cfg = config(2, 1);
    cfg.init_min_depth = 0;
    cfg.init_max_depth = 0;
    Rng rng;
    CHECK_NOTHROW(init_ramped(cfg, only_one, 0, 0, rng));
    CHECK_THROWS_AS(init_ramped(cfg, only_one, 1, 2, rng), ConfigError);
}

}

TEST_SUITE("tgp variation") {

TEST_CASE("crossover of single terminals yields b's terminal")
{
    auto cfg = config(3, 1);
    const TreeForest a{{{Node::input(0)}}, cfg.max_depth};
    const TreeForest b{{{Node::input(2)}}, cfg.max_depth};
    Rng rng = derive_rng(5, 0);
    for (int i = 0; i < 20; ++i) {
        CHECK(subtree_crossover(a, b, cfg, rng) == b);
    }
}

TEST_CASE("crossover into a terminal parent copies a whole subtree of b")
{
    auto cfg = config(2, 1);
    Rng rng = derive_rng(6, 0);
    const TreeForest a{{{Node::input(0)}}, cfg.max_depth};
    const TreeForest b{{{fn(real_set(), "mul"), fn(real_set(), "add"), Node::input(0), Node::input(1),
                         Node::input(0)}},
                       cfg.max_depth};
    for (int i = 0; i < 50; ++i) {
        const auto child = subtree_crossover(a, b, cfg, rng);
        const auto& t = child.trees[0];
        bool found = false;
        for (std::size_t s = 0; s < b.trees[0].size(); ++s) {
            const Tree sub(b.trees[0].begin() + static_cast<std::ptrdiff_t>(s),
                           b.trees[0].begin() + static_cast<std::ptrdiff_t>(subtree_end(b.trees[0], s)));
            found = found || sub == t;
        }
        CHECK(found);
    }
}

TEST_CASE("crossover rejects mismatched forests")
{
    auto cfg = config(2, 2);
    const TreeForest a{{{Node::input(0)}, {Node::input(1)}}, cfg.max_depth};
    const TreeForest b{{{Node::input(0)}}, cfg.max_depth};
    Rng rng;
    CHECK_THROWS_AS(subtree_crossover(a, b, cfg, rng), ConfigError);
}

TEST_CASE("crossover falls back to a copy of a when the depth cap cannot be met")
{
    auto cfg = config(2, 1, 2);
    Rng rng = derive_rng(7, 0);
    const TreeForest a = init_ramped(cfg, real_set(), 2, 2, rng, InitMethod::Full);
    const TreeForest b = a;
    std::size_t copies = 0;
    for (int i = 0; i < 200; ++i) {
        const auto child = subtree_crossover(a, b, cfg, rng);
        REQUIRE(tree_depth(child.trees[0]) <= 2);
        copies += child == a ? 1 : 0;
    }
    CHECK(copies > 0);
}

TEST_CASE("10k crossovers and mutations keep forests valid")
{
    for (const bool boolean : {false, true}) {
        const FunctionSet& fset = boolean ? bool_set() : real_set();
        auto cfg = config(5, 3, 8);
        cfg.boolean_constants = boolean;
        Rng rng = derive_rng(boolean ? 8 : 9, 0);
        std::vector<TreeForest> pool;
        for (int i = 0; i < 50; ++i) {
            pool.push_back(init_ramped(cfg, fset, 1, 4, rng));
        }
        for (int i = 0; i < 10000; ++i) {
            const auto& a = pool[rng.below(pool.size())];
            const auto& b = pool[rng.below(pool.size())];
            const auto child = subtree_crossover(a, b, cfg, rng);
            REQUIRE_FALSE(check_forest(child, fset, 5, 3).has_value());
            REQUIRE(forest_metrics(child).depth <= 8);
            const auto mutant = subtree_mutation(child, fset, cfg, rng);
            REQUIRE_FALSE(check_forest(mutant, fset, 5, 3).has_value());
            REQUIRE(forest_metrics(mutant).depth <= 8);
            pool[rng.below(pool.size())] = rng.bernoulli(0.5) ? child : mutant;
        }
    }
}

TEST_CASE("mutation at max_depth 0 swaps a terminal for a terminal")
{
    auto cfg = config(3, 1, 0);
    cfg.init_min_depth = 0;
    cfg.init_max_depth = 0;
    Rng rng = derive_rng(10, 0);
    const TreeForest a{{{Node::input(1)}}, 0};
    for (int i = 0; i < 100; ++i) {
        const auto m = subtree_mutation(a, real_set(), cfg, rng);
        CHECK(m.trees[0].size() == 1);
        CHECK(m.trees[0][0].arity == 0);
    }
}

TEST_CASE("leaf mutation with depth-0 replacement changes at most that leaf")
{
    auto cfg = config(3, 1);
    cfg.mutation_max_depth = 0;
    Rng rng = derive_rng(11, 0);
    for (int i = 0; i < 1000; ++i) {
        const auto parent = init_ramped(cfg, real_set(), 3, 3, rng, InitMethod::Full);
        const auto child = subtree_mutation(parent, real_set(), cfg, rng);
        const auto& p = parent.trees[0];
        const auto& c = child.trees[0];
        if (c.size() != p.size()) {
            continue; // an interior node was replaced
        }
        std::size_t diffs = 0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (!(p[k] == c[k])) {
                ++diffs;
                CHECK(p[k].arity == 0);
            }
        }
        CHECK(diffs <= 1);
    }
}

}

TEST_SUITE("tgp evaluation") {

TEST_CASE("identity and hand-evaluated trees")
{
    const Tree x0{Node::input(0)};
    const double seven[] = {7.0};
    CHECK(evaluate_tree(x0, real_set(), seven) == 7.0);

    const Tree t{fn(real_set(), "add"), Node::input(0), fn(real_set(), "mul"), Node::input(0), Node::input(0)};
    const double three[] = {3.0};
    CHECK(evaluate_tree(t, real_set(), three) == 12.0);

    const Tree nand{fn(bool_set(), "nand"), Node::input(0), Node::input(1)};
    const double tt[] = {1.0, 1.0};
    CHECK(evaluate_tree(nand, bool_set(), tt) == 0.0);
}

TEST_CASE("evaluation is referentially transparent")
{
    auto cfg = config(3, 2);
    Rng rng = derive_rng(12, 0);
    for (int i = 0; i < 200; ++i) {
        const auto f = init_ramped(cfg, real_set(), 1, 6, rng);
        const double in[] = {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        CHECK(evaluate_forest(f, real_set(), in) == evaluate_forest(f, real_set(), in));
    }
}

TEST_CASE("packed evaluation agrees with a recursive Boolean oracle")
{
    auto cfg = config(4, 1);
    Rng rng = derive_rng(13, 0);
    const auto patterns = input_patterns(4);
    for (int i = 0; i < 300; ++i) {
        const auto f = init_ramped(cfg, bool_set(), 1, 6, rng);
        std::uint64_t out = 0;
        evaluate_tree_packed(f.trees[0], bool_set(), patterns, 1, std::span<std::uint64_t>(&out, 1));
        for (std::size_t row = 0; row < 16; ++row) {
            CHECK(((out >> row) & 1U) == (oracle::tree_bool(f.trees[0], bool_set(), oracle::row_bits(row, 4)) ? 1U : 0U));
        }
    }
}

TEST_CASE("expression rendering")
{
    const Tree add{fn(real_set(), "add"), Node::input(0), Node::constant(1.0)};
    CHECK(to_expression(add, real_set()) == "(add x0 1.0)");
    const Tree nand{fn(bool_set(), "nand"), Node::input(0), Node::input(1)};
    CHECK(to_expression(nand, bool_set()) == "(nand x0 x1)");
    const Tree nested{fn(real_set(), "mul"), fn(real_set(), "add"), Node::input(0), Node::input(1), Node::input(0)};
    CHECK(to_expression(nested, real_set()) == "(mul (add x0 x1) x0)");
    const TreeForest two{{add, nested}, 12};
    CHECK(to_expression_string(two, real_set()) == "(add x0 1.0); (mul (add x0 x1) x0)");
    CHECK(format_constant(-0.25) == "-0.25");
}

TEST_CASE("forest metrics take max depth and total nodes")
{
    const Tree d1{fn(real_set(), "add"), Node::input(0), Node::input(0)};
    const Tree d3{fn(real_set(), "add"), fn(real_set(), "add"), fn(real_set(), "add"), Node::input(0),
                  Node::input(0), Node::input(0), Node::input(0)};
    const auto m = forest_metrics(TreeForest{{d1, d3}, 12});
    CHECK(m.depth == 3);
    CHECK(m.node_count == 10);
    const auto leaf = forest_metrics(TreeForest{{{Node::input(0)}}, 12});
    CHECK(leaf.depth == 0);
    CHECK(leaf.node_count == 1);
}

TEST_CASE("validator flags broken trees")
{
    const Tree missing_child{fn(real_set(), "add"), Node::input(0)};
    CHECK(check_forest(TreeForest{{missing_child}, 12}, real_set(), 1, 1).has_value());
    const Tree bad_input{Node::input(5)};
    CHECK(check_forest(TreeForest{{bad_input}, 12}, real_set(), 2, 1).has_value());
    CHECK(check_forest(TreeForest{{bad_input}, 12}, real_set(), 6, 2).has_value());
}

TEST_CASE("multi-output models report as tgp-forest")
{
    CHECK(TgpModel(config(2, 1), real_set()).name() == "tgp");
    CHECK(TgpModel(config(2, 3), real_set()).name() == "tgp-forest");
}

}
