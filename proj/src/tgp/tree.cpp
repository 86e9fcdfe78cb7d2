#include "crossgp/tgp/tree.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "crossgp/core/error.hpp"

namespace crossgp::tgp {

namespace {

bool constants_enabled(const FunctionSet& fset, const TgpConfig& cfg)
{
    if (cfg.constant_probability <= 0.0) {
        return false;
    }
    return fset.domain() == Domain::Real || cfg.boolean_constants;
}

std::size_t plain_terminal_count(const FunctionSet& fset, const TgpConfig& cfg)
{
    return cfg.n_inputs + fset.nullary().size();
}

Node random_terminal(const FunctionSet& fset, const TgpConfig& cfg, Rng& rng)
{
    const std::size_t plain = plain_terminal_count(fset, cfg);
    if (constants_enabled(fset, cfg) && (plain == 0 || rng.bernoulli(cfg.constant_probability))) {
        if (fset.domain() == Domain::Boolean) {
            return Node::constant(static_cast<double>(rng.below(2)));
        }
        return Node::constant(rng.uniform(-1.0, 1.0));
    }
    const auto pick = static_cast<std::size_t>(rng.below(plain));
    if (pick < cfg.n_inputs) {
        return Node::input(pick);
    }
    return Node::function(fset[fset.nullary()[pick - cfg.n_inputs]]);
}

Node random_function(const FunctionSet& fset, Rng& rng)
{
    const auto& ids = fset.functions();
    return Node::function(fset[ids[rng.below(ids.size())]]);
}

void grow_into(Tree& out, InitMethod method, std::size_t depth, std::size_t target, const FunctionSet& fset,
               const TgpConfig& cfg, Rng& rng)
{
    bool internal = false;
    if (depth < target && !fset.functions().empty()) {
        if (method == InitMethod::Full) {
            internal = true;
        } else {
            const std::size_t nf = fset.functions().size();
            const std::size_t nt = plain_terminal_count(fset, cfg) + (constants_enabled(fset, cfg) ? 1 : 0);
            internal = rng.below(nf + nt) < nf;
        }
    }
    if (!internal) {
        out.push_back(random_terminal(fset, cfg, rng));
        return;
    }
    const Node fn = random_function(fset, rng);
    out.push_back(fn);
    for (std::uint32_t c = 0; c < fn.arity; ++c) {
        grow_into(out, method, depth + 1, target, fset, cfg, rng);
    }
}

void require_functions(const FunctionSet& fset, std::size_t depth)
{
    if (depth > 0 && fset.functions().empty()) {
        throw ConfigError("function set has no primitive of arity >= 1; trees deeper than 0 cannot be built");
    }
}

void render(const Tree& tree, std::size_t& pos, const FunctionSet& fset, std::string& out)
{
    const Node& node = tree[pos++];
    switch (node.kind) {
    case NodeKind::Input:
        out += 'x';
        out += std::to_string(node.index);
        return;
    case NodeKind::Constant:
        if (fset.domain() == Domain::Boolean) {
            out += node.value != 0.0 ? "true" : "false";
        } else {
            out += format_constant(node.value);
        }
        return;
    case NodeKind::Function:
        break;
    }
    if (node.arity == 0) {
        out += fset[node.index].name;
        return;
    }
    out += '(';
    out += fset[node.index].name;
    for (std::uint32_t c = 0; c < node.arity; ++c) {
        out += ' ';
        render(tree, pos, fset, out);
    }
    out += ')';
}

} // namespace

void TgpConfig::validate(const FunctionSet& fset) const
{
    if (n_outputs < 1) {
        throw ConfigError("tgp: n_outputs must be >= 1");
    }
    if (init_min_depth > init_max_depth || init_max_depth > max_depth) {
        throw ConfigError("tgp: require init_min_depth <= init_max_depth <= max_depth");
    }
    require_functions(fset, init_max_depth);
    if (!(constant_probability >= 0.0 && constant_probability <= 1.0)) {
        throw ConfigError("tgp: constant_probability must be in [0, 1]");
    }
    if (plain_terminal_count(fset, *this) == 0 && !constants_enabled(fset, *this)) {
        throw ConfigError("tgp: no terminals available (no inputs, nullary primitives or constants)");
    }
}

std::size_t subtree_end(const Tree& tree, std::size_t pos)
{
    std::size_t need = 1;
    while (need > 0) {
        need += tree[pos].arity;
        --need;
        ++pos;
    }
    return pos;
}

std::vector<std::size_t> node_depths(const Tree& tree)
{
    std::vector<std::size_t> depths(tree.size());
    std::vector<std::uint32_t> open;
    for (std::size_t i = 0; i < tree.size(); ++i) {
        depths[i] = open.size();
        if (tree[i].arity > 0) {
            open.push_back(tree[i].arity);
            continue;
        }
        while (!open.empty()) {
            if (--open.back() != 0) {
                break;
            }
            open.pop_back();
        }
    }
    return depths;
}

std::vector<std::size_t> subtree_heights(const Tree& tree)
{
    std::vector<std::size_t> heights(tree.size());
    std::vector<std::size_t> stack;
    for (std::size_t i = tree.size(); i-- > 0;) {
        std::size_t h = 0;
        for (std::uint32_t c = 0; c < tree[i].arity; ++c) {
            h = std::max(h, stack.back() + 1);
            stack.pop_back();
        }
        heights[i] = h;
        stack.push_back(h);
    }
    return heights;
}

std::size_t tree_depth(const Tree& tree)
{
    const auto depths = node_depths(tree);
    return depths.empty() ? 0 : *std::max_element(depths.begin(), depths.end());
}

ForestMetrics forest_metrics(const TreeForest& forest)
{
    ForestMetrics m;
    for (const auto& tree : forest.trees) {
        m.depth = std::max(m.depth, tree_depth(tree));
        m.node_count += tree.size();
    }
    return m;
}

Tree generate_tree(InitMethod method, std::size_t depth, const FunctionSet& fset, const TgpConfig& cfg, Rng& rng)
{
    if (method == InitMethod::Full) {
        require_functions(fset, depth);
    }
    Tree tree;
    grow_into(tree, method, 0, depth, fset, cfg, rng);
    return tree;
}

TreeForest init_ramped(const TgpConfig& cfg, const FunctionSet& fset, std::size_t depth_min, std::size_t depth_max,
                       Rng& rng, std::optional<InitMethod> method)
{
    if (depth_min > depth_max || depth_max > cfg.max_depth) {
        throw ConfigError("init_ramped: require depth_min <= depth_max <= max_depth");
    }
    require_functions(fset, depth_max);
    TreeForest forest;
    forest.max_depth = cfg.max_depth;
    forest.trees.reserve(cfg.n_outputs);
    bool full = method ? *method == InitMethod::Full : rng.bernoulli(0.5);
    for (std::size_t t = 0; t < cfg.n_outputs; ++t) {
        const auto target = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(depth_min),
                                                                  static_cast<std::int64_t>(depth_max)));
        const InitMethod m = method ? *method : (full ? InitMethod::Full : InitMethod::Grow);
        forest.trees.push_back(generate_tree(m, target, fset, cfg, rng));
        full = !full;
    }
    return forest;
}

TreeForest subtree_crossover(const TreeForest& a, const TreeForest& b, const TgpConfig& cfg, Rng& rng)
{
    if (a.trees.size() != b.trees.size() || a.trees.empty()) {
        throw ConfigError("subtree_crossover: parents have different forest shapes");
    }
    for (std::size_t attempt = 0; attempt <= cfg.crossover_retries; ++attempt) {
        const auto t = static_cast<std::size_t>(rng.below(a.trees.size()));
        const Tree& ta = a.trees[t];
        const Tree& tb = b.trees[t];
        const auto i = static_cast<std::size_t>(rng.below(ta.size()));
        const auto j = static_cast<std::size_t>(rng.below(tb.size()));
        const std::size_t end_i = subtree_end(ta, i);
        const std::size_t end_j = subtree_end(tb, j);

        Tree child;
        child.reserve(ta.size() - (end_i - i) + (end_j - j));
        child.insert(child.end(), ta.begin(), ta.begin() + static_cast<std::ptrdiff_t>(i));
        child.insert(child.end(), tb.begin() + static_cast<std::ptrdiff_t>(j), tb.begin() + static_cast<std::ptrdiff_t>(end_j));
        child.insert(child.end(), ta.begin() + static_cast<std::ptrdiff_t>(end_i), ta.end());
        if (tree_depth(child) <= a.max_depth) {
            TreeForest out = a;
            out.trees[t] = std::move(child);
            return out;
        }
    }
    return a;
}

TreeForest subtree_mutation(const TreeForest& a, const FunctionSet& fset, const TgpConfig& cfg, Rng& rng)
{
    TreeForest out = a;
    const auto t = static_cast<std::size_t>(rng.below(a.trees.size()));
    const Tree& tree = a.trees[t];
    const auto i = static_cast<std::size_t>(rng.below(tree.size()));
    const std::size_t depth_i = node_depths(tree)[i];
    const std::size_t room = depth_i >= a.max_depth ? 0 : a.max_depth - depth_i;
    const std::size_t limit = std::min(room, cfg.mutation_max_depth);

    Tree replacement = generate_tree(InitMethod::Grow, limit, fset, cfg, rng);
    const std::size_t end_i = subtree_end(tree, i);
    Tree child;
    child.reserve(tree.size() - (end_i - i) + replacement.size());
    child.insert(child.end(), tree.begin(), tree.begin() + static_cast<std::ptrdiff_t>(i));
    child.insert(child.end(), replacement.begin(), replacement.end());
    child.insert(child.end(), tree.begin() + static_cast<std::ptrdiff_t>(end_i), tree.end());
    out.trees[t] = std::move(child);
    return out;
}

double evaluate_tree(const Tree& tree, const FunctionSet& fset, std::span<const double> inputs)
{
    thread_local std::vector<double> stack;
    stack.clear();
    std::array<double, max_supported_arity> args{};
    for (std::size_t i = tree.size(); i-- > 0;) {
        const Node& node = tree[i];
        switch (node.kind) {
        case NodeKind::Input:
            stack.push_back(inputs[node.index]);
            break;
        case NodeKind::Constant:
            stack.push_back(node.value);
            break;
        case NodeKind::Function: {
            for (std::uint32_t c = 0; c < node.arity; ++c) {
                args[c] = stack.back();
                stack.pop_back();
            }
            stack.push_back(fset[node.index].scalar(std::span<const double>(args.data(), node.arity)));
            break;
        }
        }
    }
    return stack.back();
}

std::vector<double> evaluate_forest(const TreeForest& forest, const FunctionSet& fset, std::span<const double> inputs)
{
    std::vector<double> out;
    out.reserve(forest.trees.size());
    for (const auto& tree : forest.trees) {
        out.push_back(evaluate_tree(tree, fset, inputs));
    }
    return out;
}

void evaluate_tree_packed(const Tree& tree, const FunctionSet& fset, std::span<const std::uint64_t> inputs,
                          std::size_t words, std::span<std::uint64_t> output)
{
    if (fset.domain() != Domain::Boolean) {
        throw std::logic_error("packed evaluation requires a Boolean function set");
    }
    // Stack of word blocks; slot s occupies [s * words, (s + 1) * words).
    std::vector<std::uint64_t> stack;
    stack.reserve(words * 16);
    std::size_t height = 0;
    std::array<std::uint64_t, max_supported_arity> args{};
    for (std::size_t i = tree.size(); i-- > 0;) {
        const Node& node = tree[i];
        stack.resize((height + 1) * words);
        auto* dst = stack.data() + height * words;
        switch (node.kind) {
        case NodeKind::Input:
            std::copy_n(inputs.data() + node.index * words, words, dst);
            break;
        case NodeKind::Constant:
            std::fill_n(dst, words, node.value != 0.0 ? ~std::uint64_t{0} : std::uint64_t{0});
            break;
        case NodeKind::Function: {
            const auto fn = fset[node.index].packed;
            const std::size_t arity = node.arity;
            // Child c sits at slot height - 1 - c; the result overwrites the
            // lowest of them, so gather every argument before writing.
            const std::size_t base = height - arity;
            for (std::size_t w = 0; w < words; ++w) {
                for (std::size_t c = 0; c < arity; ++c) {
                    args[c] = stack[(height - 1 - c) * words + w];
                }
                stack[base * words + w] = fn(std::span<const std::uint64_t>(args.data(), arity));
            }
            height = base;
            break;
        }
        }
        ++height;
    }
    std::copy_n(stack.data(), words, output.data());
}

std::string to_expression(const Tree& tree, const FunctionSet& fset)
{
    std::string out;
    std::size_t pos = 0;
    render(tree, pos, fset, out);
    return out;
}

std::string to_expression_string(const TreeForest& forest, const FunctionSet& fset)
{
    std::string out;
    for (std::size_t t = 0; t < forest.trees.size(); ++t) {
        if (t > 0) {
            out += "; ";
        }
        out += to_expression(forest.trees[t], fset);
    }
    return out;
}

std::optional<std::string> check_forest(const TreeForest& forest, const FunctionSet& fset, std::size_t n_inputs,
                                        std::size_t n_outputs)
{
    if (forest.trees.size() != n_outputs) {
        return "forest has " + std::to_string(forest.trees.size()) + " trees, expected " + std::to_string(n_outputs);
    }
    for (std::size_t t = 0; t < forest.trees.size(); ++t) {
        const Tree& tree = forest.trees[t];
        const std::string where = "tree " + std::to_string(t);
        if (tree.empty()) {
            return where + " is empty";
        }
        std::size_t need = 1;
        for (std::size_t i = 0; i < tree.size(); ++i) {
            if (need == 0) {
                return where + " has trailing nodes after position " + std::to_string(i);
            }
            const Node& n = tree[i];
            switch (n.kind) {
            case NodeKind::Function:
                if (n.index >= fset.size()) {
                    return where + ": primitive id out of range";
                }
                if (n.arity != fset[n.index].arity) {
                    return where + ": child count does not match arity of '" + fset[n.index].name + "'";
                }
                break;
            case NodeKind::Input:
                if (n.arity != 0 || n.index >= n_inputs) {
                    return where + ": bad input node";
                }
                break;
            case NodeKind::Constant:
                if (n.arity != 0 || !std::isfinite(n.value) ||
                    (fset.domain() == Domain::Boolean && n.value != 0.0 && n.value != 1.0)) {
                    return where + ": bad constant node";
                }
                break;
            }
            need = need - 1 + n.arity;
        }
        if (need != 0) {
            return where + " is truncated";
        }
        if (tree_depth(tree) > forest.max_depth) {
            return where + " exceeds max depth " + std::to_string(forest.max_depth);
        }
    }
    return std::nullopt;
}

std::string format_constant(double value)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    std::string out(buf.data(), res.ptr);
    if (out.find_first_of(".en") == std::string::npos) {
        out += ".0";
    }
    return out;
}

} // namespace crossgp::tgp
