#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crossgp/core/primitives.hpp"
#include "crossgp/core/rng.hpp"

namespace crossgp::tgp {

enum class NodeKind : std::uint8_t { Function, Input, Constant };

struct Node {
    NodeKind kind = NodeKind::Input;
    // Number of children; nonzero only for Function nodes.
    std::uint32_t arity = 0;
    // Primitive id for Function nodes, input index for Input nodes.
    std::uint32_t index = 0;
    double value = 0.0;

    static Node function(const Primitive& p)
    {
        return {NodeKind::Function, static_cast<std::uint32_t>(p.arity), static_cast<std::uint32_t>(p.id), 0.0};
    }
    static Node input(std::size_t i) { return {NodeKind::Input, 0, static_cast<std::uint32_t>(i), 0.0}; }
    static Node constant(double v) { return {NodeKind::Constant, 0, 0, v}; }

    friend bool operator==(const Node&, const Node&) = default;
};

/// Parse tree stored in prefix (pre-order) layout: every subtree occupies a
/// contiguous range starting at its root.
using Tree = std::vector<Node>;

/// The genome: one independent tree per program output.
struct TreeForest {
    std::vector<Tree> trees;
    std::size_t max_depth = 12;

    friend bool operator==(const TreeForest&, const TreeForest&) = default;
};

struct TgpConfig {
    std::size_t n_inputs = 1;
    std::size_t n_outputs = 1;
    std::size_t max_depth = 12;
    std::size_t init_min_depth = 1;
    std::size_t init_max_depth = 4;
    // Replacement subtrees grown by mutation are capped at this depth.
    std::size_t mutation_max_depth = 4;
    // Chance that a terminal is a constant rather than an input.
    double constant_probability = 0.2;
    // Boolean domain only: allow the constants false/true as terminals.
    bool boolean_constants = false;
    std::size_t crossover_retries = 3;

    void validate(const FunctionSet& fset) const;
};

enum class InitMethod { Grow, Full };

/// One past the last node of the subtree rooted at `pos`.
std::size_t subtree_end(const Tree& tree, std::size_t pos);
/// Depth of each node (root = 0), in prefix order.
std::vector<std::size_t> node_depths(const Tree& tree);
/// Height of the subtree rooted at each node (leaf = 0), in prefix order.
std::vector<std::size_t> subtree_heights(const Tree& tree);
std::size_t tree_depth(const Tree& tree);

struct ForestMetrics {
    std::size_t depth = 0;
    std::size_t node_count = 0;
};

ForestMetrics forest_metrics(const TreeForest& forest);

/// A tree of the given method and target depth. Full trees have every leaf at
/// exactly `depth`; grow trees stop early at random.
Tree generate_tree(InitMethod method, std::size_t depth, const FunctionSet& fset, const TgpConfig& cfg, Rng& rng);

/// Ramped initialization: each tree draws a target depth uniformly from
/// [depth_min, depth_max]. Without an explicit method, trees alternate
/// grow/full starting from a random one.
TreeForest init_ramped(const TgpConfig& cfg, const FunctionSet& fset, std::size_t depth_min, std::size_t depth_max,
                       Rng& rng, std::optional<InitMethod> method = std::nullopt);

/// Child = copy of `a` with one subtree (uniformly chosen tree index and node)
/// replaced by a uniformly chosen subtree of `b`'s tree at the same index.
/// Falls back to a copy of `a` after cfg.crossover_retries failed attempts to
/// respect the depth cap.
TreeForest subtree_crossover(const TreeForest& a, const TreeForest& b, const TgpConfig& cfg, Rng& rng);

/// Replaces one uniformly chosen subtree with a freshly grown one that keeps
/// the tree within max_depth.
TreeForest subtree_mutation(const TreeForest& a, const FunctionSet& fset, const TgpConfig& cfg, Rng& rng);

double evaluate_tree(const Tree& tree, const FunctionSet& fset, std::span<const double> inputs);
std::vector<double> evaluate_forest(const TreeForest& forest, const FunctionSet& fset, std::span<const double> inputs);

/// Bit-parallel evaluation of one tree; layout as in Program::evaluate_packed.
void evaluate_tree_packed(const Tree& tree, const FunctionSet& fset, std::span<const std::uint64_t> inputs,
                          std::size_t words, std::span<std::uint64_t> output);

/// Prefix s-expression, e.g. "(mul (add x0 x1) x0)".
std::string to_expression(const Tree& tree, const FunctionSet& fset);
/// One expression per output, joined by "; ".
std::string to_expression_string(const TreeForest& forest, const FunctionSet& fset);

/// Structural validation: arity-exact children, depth cap, input range,
/// primitive ids, tree count. Returns a description of the first problem.
std::optional<std::string> check_forest(const TreeForest& forest, const FunctionSet& fset, std::size_t n_inputs,
                                        std::size_t n_outputs);

/// Shortest round-trip rendering of a real constant, always with a decimal
/// point or exponent ("1.0", "-0.25", "1e+20").
std::string format_constant(double value);

} // namespace crossgp::tgp
