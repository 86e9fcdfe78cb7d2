#include "crossgp/cgp/genome.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "crossgp/core/error.hpp"

namespace crossgp::cgp {

void CgpConfig::validate(const FunctionSet& fset) const
{
    if (n_inputs < 1) {
        throw ConfigError("cgp: n_inputs must be >= 1");
    }
    if (n_outputs < 1) {
        throw ConfigError("cgp: n_outputs must be >= 1");
    }
    if (n_columns < 1 || n_rows < 1) {
        throw ConfigError("cgp: the grid needs at least one column and one row");
    }
    if (levels_back < 1 || levels_back > n_columns) {
        throw ConfigError("cgp: levels_back must be in [1, n_columns]");
    }
    if (max_arity != fset.max_arity()) {
        throw ConfigError("cgp: max_arity must equal the function set's max arity");
    }
}

std::uint32_t GeneRange::value_at(std::size_t k) const noexcept
{
    return static_cast<std::uint32_t>(k < low_count ? k : high_first + (k - low_count));
}

std::optional<std::size_t> GeneRange::position_of(std::uint32_t value) const noexcept
{
    if (value < low_count) {
        return value;
    }
    if (value >= high_first && value < high_first + high_count) {
        return low_count + (value - high_first);
    }
    return std::nullopt;
}

GeneRange gene_range(const CgpConfig& cfg, const FunctionSet& fset, std::size_t gene)
{
    const std::size_t node_gene_count = cfg.n_nodes() * cfg.genes_per_node();
    if (gene >= node_gene_count) {
        return {cfg.n_inputs + cfg.n_nodes(), 0, 0};
    }
    const std::size_t node = gene / cfg.genes_per_node();
    if (gene % cfg.genes_per_node() == 0) {
        return {fset.size(), 0, 0};
    }
    const std::size_t column = node / cfg.n_rows;
    const std::size_t first_column = column >= cfg.levels_back ? column - cfg.levels_back : 0;
    return {cfg.n_inputs, cfg.n_inputs + first_column * cfg.n_rows, (column - first_column) * cfg.n_rows};
}

std::uint32_t get_gene(const CgpGenome& g, const CgpConfig& cfg, std::size_t gene)
{
    const std::size_t node_gene_count = cfg.n_nodes() * cfg.genes_per_node();
    return gene < node_gene_count ? g.node_genes[gene] : g.output_genes[gene - node_gene_count];
}

void set_gene(CgpGenome& g, const CgpConfig& cfg, std::size_t gene, std::uint32_t value)
{
    const std::size_t node_gene_count = cfg.n_nodes() * cfg.genes_per_node();
    if (gene < node_gene_count) {
        g.node_genes[gene] = value;
    } else {
        g.output_genes[gene - node_gene_count] = value;
    }
}

CgpGenome init_random_cgp(const CgpConfig& cfg, const FunctionSet& fset, Rng& rng)
{
    cfg.validate(fset);
    CgpGenome g;
    g.node_genes.resize(cfg.n_nodes() * cfg.genes_per_node());
    g.output_genes.resize(cfg.n_outputs);
    for (std::size_t gene = 0; gene < cfg.genome_length(); ++gene) {
        const GeneRange range = gene_range(cfg, fset, gene);
        set_gene(g, cfg, gene, range.value_at(static_cast<std::size_t>(rng.below(range.size()))));
    }
    return g;
}

ActiveSet decode_active(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset)
{
    const std::size_t total = cfg.n_inputs + cfg.n_nodes();
    std::vector<char> used(total, 0);
    for (const auto out : g.output_genes) {
        used[out] = 1;
    }
    for (std::size_t addr = total; addr-- > cfg.n_inputs;) {
        if (!used[addr]) {
            continue;
        }
        const std::size_t base = (addr - cfg.n_inputs) * cfg.genes_per_node();
        const std::size_t arity = fset[g.node_genes[base]].arity;
        for (std::size_t c = 0; c < arity; ++c) {
            used[g.node_genes[base + 1 + c]] = 1;
        }
    }
    ActiveSet active;
    for (std::size_t addr = cfg.n_inputs; addr < total; ++addr) {
        if (used[addr]) {
            active.push_back(addr);
        }
    }
    return active;
}

void evaluate_active(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset, const ActiveSet& active,
                     std::span<const double> inputs, std::span<double> outputs)
{
    if (inputs.size() != cfg.n_inputs || outputs.size() != cfg.n_outputs) {
        throw std::invalid_argument("cgp: input/output size mismatch");
    }
    thread_local std::vector<double> values;
    values.resize(cfg.n_inputs + cfg.n_nodes());
    std::copy(inputs.begin(), inputs.end(), values.begin());
    std::array<double, max_supported_arity> args{};
    for (const std::size_t addr : active) {
        const std::size_t base = (addr - cfg.n_inputs) * cfg.genes_per_node();
        const Primitive& fn = fset[g.node_genes[base]];
        for (std::size_t c = 0; c < fn.arity; ++c) {
            args[c] = values[g.node_genes[base + 1 + c]];
        }
        values[addr] = fn.scalar(std::span<const double>(args.data(), fn.arity));
    }
    for (std::size_t o = 0; o < cfg.n_outputs; ++o) {
        outputs[o] = values[g.output_genes[o]];
    }
}

void evaluate_active_packed(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset,
                            const ActiveSet& active, std::span<const std::uint64_t> inputs, std::size_t words,
                            std::span<std::uint64_t> outputs)
{
    if (fset.domain() != Domain::Boolean) {
        throw std::logic_error("packed evaluation requires a Boolean function set");
    }
    if (inputs.size() != cfg.n_inputs * words || outputs.size() != cfg.n_outputs * words) {
        throw std::invalid_argument("cgp: packed buffer size mismatch");
    }
    std::vector<std::uint64_t> values((cfg.n_inputs + cfg.n_nodes()) * words);
    std::copy(inputs.begin(), inputs.end(), values.begin());
    std::array<const std::uint64_t*, max_supported_arity> sources{};
    std::array<std::uint64_t, max_supported_arity> args{};
    for (const std::size_t addr : active) {
        const std::size_t base = (addr - cfg.n_inputs) * cfg.genes_per_node();
        const Primitive& fn = fset[g.node_genes[base]];
        for (std::size_t c = 0; c < fn.arity; ++c) {
            sources[c] = values.data() + g.node_genes[base + 1 + c] * words;
        }
        std::uint64_t* dst = values.data() + addr * words;
        for (std::size_t w = 0; w < words; ++w) {
            for (std::size_t c = 0; c < fn.arity; ++c) {
                args[c] = sources[c][w];
            }
            dst[w] = fn.packed(std::span<const std::uint64_t>(args.data(), fn.arity));
        }
    }
    for (std::size_t o = 0; o < cfg.n_outputs; ++o) {
        std::copy_n(values.data() + g.output_genes[o] * words, words, outputs.data() + o * words);
    }
}

std::vector<double> evaluate_cgp(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset,
                                 std::span<const double> inputs)
{
    std::vector<double> out(cfg.n_outputs);
    evaluate_active(g, cfg, fset, decode_active(g, cfg, fset), inputs, out);
    return out;
}

CgpGenome point_mutation(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset, double rate, Rng& rng)
{
    CgpGenome out = g;
    if (rate <= 0.0) {
        return out;
    }
    for (std::size_t gene = 0; gene < cfg.genome_length(); ++gene) {
        if (!rng.bernoulli(rate)) {
            continue;
        }
        const GeneRange range = gene_range(cfg, fset, gene);
        const std::uint32_t current = get_gene(out, cfg, gene);
        const auto current_pos = range.position_of(current);
        if (range.size() < 2 || !current_pos) {
            if (!current_pos) {
                set_gene(out, cfg, gene, range.value_at(static_cast<std::size_t>(rng.below(range.size()))));
            }
            continue;
        }
        auto k = static_cast<std::size_t>(rng.below(range.size() - 1));
        if (k >= *current_pos) {
            ++k;
        }
        set_gene(out, cfg, gene, range.value_at(k));
    }
    return out;
}

namespace {

void render(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset, std::size_t addr, std::string& out)
{
    if (addr < cfg.n_inputs) {
        out += 'x';
        out += std::to_string(addr);
        return;
    }
    const std::size_t base = (addr - cfg.n_inputs) * cfg.genes_per_node();
    const Primitive& fn = fset[g.node_genes[base]];
    if (fn.arity == 0) {
        out += fn.name;
        return;
    }
    out += '(';
    out += fn.name;
    for (std::size_t c = 0; c < fn.arity; ++c) {
        out += ' ';
        render(g, cfg, fset, g.node_genes[base + 1 + c], out);
    }
    out += ')';
}

} // namespace

namespace {

// Node count of the fully expanded expression rooted at addr, saturating at `cap`.
std::size_t expanded_size(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset, std::size_t addr,
                          std::size_t cap, std::vector<std::size_t>& memo)
{
    if (addr < cfg.n_inputs) {
        return 1;
    }
    std::size_t& slot = memo[addr - cfg.n_inputs];
    if (slot != 0) {
        return slot;
    }
    const std::size_t base = (addr - cfg.n_inputs) * cfg.genes_per_node();
    const Primitive& fn = fset[g.node_genes[base]];
    std::size_t size = 1;
    for (std::size_t c = 0; c < fn.arity && size < cap; ++c) {
        size += expanded_size(g, cfg, fset, g.node_genes[base + 1 + c], cap, memo);
    }
    slot = std::min(size, cap);
    return slot;
}

std::string node_ref(const CgpConfig& cfg, std::size_t addr)
{
    return (addr < cfg.n_inputs ? "x" : "n") + std::to_string(addr);
}

} // namespace

std::string cgp_to_expression(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset)
{
    std::vector<std::size_t> memo(cfg.n_nodes(), 0);
    std::size_t total = 0;
    for (const auto addr : g.output_genes) {
        total += expanded_size(g, cfg, fset, addr, max_expanded_expression, memo);
    }

    std::string out;
    if (total < max_expanded_expression) {
        for (std::size_t o = 0; o < g.output_genes.size(); ++o) {
            if (o > 0) {
                out += "; ";
            }
            render(g, cfg, fset, g.output_genes[o], out);
        }
        return out;
    }

    out = "let";
    const ActiveSet active = decode_active(g, cfg, fset);
    for (std::size_t i = 0; i < active.size(); ++i) {
        const std::size_t addr = active[i];
        const std::size_t base = (addr - cfg.n_inputs) * cfg.genes_per_node();
        const Primitive& fn = fset[g.node_genes[base]];
        out += (i == 0 ? " " : ", ") + node_ref(cfg, addr) + " = ";
        if (fn.arity == 0) {
            out += fn.name;
            continue;
        }
        out += "(" + fn.name;
        for (std::size_t c = 0; c < fn.arity; ++c) {
            out += " " + node_ref(cfg, g.node_genes[base + 1 + c]);
        }
        out += ")";
    }
    out += " in ";
    for (std::size_t o = 0; o < g.output_genes.size(); ++o) {
        out += (o > 0 ? "; " : "") + node_ref(cfg, g.output_genes[o]);
    }
    return out;
}

std::optional<std::string> check_genome(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset)
{
    if (g.node_genes.size() != cfg.n_nodes() * cfg.genes_per_node()) {
        return "node gene count " + std::to_string(g.node_genes.size()) + " does not match the grid";
    }
    if (g.output_genes.size() != cfg.n_outputs) {
        return "output gene count does not match n_outputs";
    }
    for (std::size_t gene = 0; gene < cfg.genome_length(); ++gene) {
        if (!gene_range(cfg, fset, gene).position_of(get_gene(g, cfg, gene))) {
            return "gene " + std::to_string(gene) + " holds out-of-range value " +
                   std::to_string(get_gene(g, cfg, gene));
        }
    }
    return std::nullopt;
}

} // namespace crossgp::cgp
