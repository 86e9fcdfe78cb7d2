#include <doctest.h>

#include <algorithm>
#include <set>

#include "crossgp/blackbox/truth_table.hpp"
#include "crossgp/cgp/model.hpp"
#include "crossgp/core/error.hpp"
#include "oracles.hpp"

using namespace crossgp;
using namespace crossgp::cgp;

namespace {

CgpConfig grid(std::size_t n_in, std::size_t n_out, std::size_t cols, std::size_t rows, std::size_t lb,
               std::size_t arity = 2)
{
    CgpConfig cfg;
    cfg.n_inputs = n_in;
    cfg.n_outputs = n_out;
    cfg.n_columns = cols;
    cfg.n_rows = rows;
    cfg.levels_back = lb;
    cfg.max_arity = arity;
    return cfg;
}

const FunctionSet& and_or_xor()
{
    static const FunctionSet fset = FunctionSet::from_names(Domain::Boolean, {"and", "or", "xor"});
    return fset;
}

// The hand-traced example: n2 = xor(x0, x1), n3 = and(n2, x1), n4 = or(n2, n3).
CgpGenome example_genome()
{
    return CgpGenome{{2, 0, 1, 0, 2, 1, 1, 2, 3}, {4}};
}

// Independent reachability: repeated sweeps until no new node joins.
std::set<std::size_t> reachable(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset)
{
    std::set<std::size_t> seen(g.output_genes.begin(), g.output_genes.end());
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto addr : std::set<std::size_t>(seen)) {
            if (addr < cfg.n_inputs) {
                continue;
            }
            const std::size_t base = (addr - cfg.n_inputs) * (1 + cfg.max_arity);
            for (std::size_t c = 0; c < fset[g.node_genes[base]].arity; ++c) {
                grew = seen.insert(g.node_genes[base + 1 + c]).second || grew;
            }
        }
    }
    std::set<std::size_t> nodes;
    for (const auto a : seen) {
        if (a >= cfg.n_inputs) {
            nodes.insert(a);
        }
    }
    return nodes;
}

// Column of a node address, computed from the grid layout.
std::size_t column(const CgpConfig& cfg, std::size_t addr)
{
    return (addr - cfg.n_inputs) / cfg.n_rows;
}

// Structural validator written from the genome invariants.
bool valid(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset)
{
    const std::size_t nodes = cfg.n_columns * cfg.n_rows;
    if (g.node_genes.size() != nodes * (1 + cfg.max_arity) || g.output_genes.size() != cfg.n_outputs) {
        return false;
    }
    for (std::size_t n = 0; n < nodes; ++n) {
        const std::size_t addr = cfg.n_inputs + n;
        const std::size_t base = n * (1 + cfg.max_arity);
        if (g.node_genes[base] >= fset.size()) {
            return false;
        }
        const std::size_t col = column(cfg, addr);
        for (std::size_t c = 0; c < cfg.max_arity; ++c) {
            const std::size_t src = g.node_genes[base + 1 + c];
            if (src < cfg.n_inputs) {
                continue;
            }
            if (src >= cfg.n_inputs + nodes) {
                return false;
            }
            const std::size_t src_col = column(cfg, src);
            if (src_col >= col || col - src_col > cfg.levels_back) {
                return false;
            }
        }
    }
    return std::all_of(g.output_genes.begin(), g.output_genes.end(),
                       [&](std::uint32_t o) { return o < cfg.n_inputs + nodes; });
}

} // namespace

TEST_SUITE("cgp example genome") {

TEST_CASE("active set and evaluation")
{
    const auto cfg = grid(2, 1, 3, 1, 3);
    const auto g = example_genome();
    CHECK(decode_active(g, cfg, and_or_xor()) == ActiveSet{2, 3, 4});
    const double in[] = {1.0, 0.0};
    CHECK(evaluate_cgp(g, cfg, and_or_xor(), in) == std::vector<double>{1.0});
    CHECK(cgp_to_expression(g, cfg, and_or_xor()) == "(or (xor x0 x1) (and (xor x0 x1) x1))");
    CHECK_FALSE(check_genome(g, cfg, and_or_xor()).has_value());
}

TEST_CASE("outputs wired to inputs")
{
    const auto cfg = grid(2, 1, 3, 1, 3);
    auto g = example_genome();
    g.output_genes = {0};
    CHECK(decode_active(g, cfg, and_or_xor()).empty());
    const double in[] = {1.0, 0.0};
    CHECK(evaluate_cgp(g, cfg, and_or_xor(), in) == std::vector<double>{1.0});
    CHECK(cgp_to_expression(g, cfg, and_or_xor()) == "x0");
}

}

TEST_SUITE("cgp genome") {

TEST_CASE("genome length and single-column wiring")
{
    const auto cfg = grid(3, 2, 1, 4, 1);
    CHECK(cfg.genome_length() == 1 * 4 * 3 + 2);
    Rng rng = derive_rng(1, 0);
    for (int i = 0; i < 200; ++i) {
        const auto g = init_random_cgp(cfg, and_or_xor(), rng);
        for (std::size_t n = 0; n < 4; ++n) {
            CHECK(g.node_genes[n * 3 + 1] < 3);
            CHECK(g.node_genes[n * 3 + 2] < 3);
        }
    }
}

TEST_CASE("10k random genomes and 10k mutants pass the validator")
{
    const std::vector<CgpConfig> configs{grid(3, 2, 10, 1, 10), grid(4, 3, 8, 3, 2), grid(2, 1, 5, 2, 1),
                                         grid(6, 1, 100, 1, 100)};
    const auto fset = FunctionSet::from_names(Domain::Boolean, {"and", "or", "nand", "nor", "not"});
    Rng rng = derive_rng(2, 0);
    for (const auto& base : configs) {
        CgpConfig cfg = base;
        cfg.max_arity = fset.max_arity();
        for (int i = 0; i < 2500; ++i) {
            const auto g = init_random_cgp(cfg, fset, rng);
            REQUIRE(valid(g, cfg, fset));
            REQUIRE_FALSE(check_genome(g, cfg, fset).has_value());
            const auto m = point_mutation(g, cfg, fset, rng.uniform01(), rng);
            REQUIRE(valid(m, cfg, fset));
            REQUIRE_FALSE(check_genome(m, cfg, fset).has_value());
        }
    }
}

TEST_CASE("mutation rate 0 is identity, rate 1 changes every multi-valued gene")
{
    const auto cfg = grid(3, 2, 6, 2, 3);
    Rng rng = derive_rng(3, 0);
    for (int i = 0; i < 200; ++i) {
        const auto g = init_random_cgp(cfg, and_or_xor(), rng);
        CHECK(point_mutation(g, cfg, and_or_xor(), 0.0, rng) == g);
        const auto m = point_mutation(g, cfg, and_or_xor(), 1.0, rng);
        for (std::size_t gene = 0; gene < cfg.genome_length(); ++gene) {
            if (gene_range(cfg, and_or_xor(), gene).size() >= 2) {
                CHECK(get_gene(m, cfg, gene) != get_gene(g, cfg, gene));
            }
        }
    }
}

TEST_CASE("validator rejects levels-back and range violations")
{
    const auto cfg = grid(2, 1, 4, 1, 1);
    Rng rng = derive_rng(4, 0);
    auto g = init_random_cgp(cfg, and_or_xor(), rng);
    g.node_genes[3 * 3 + 1] = 2; // column 3 reading column 0 with levels_back 1
    CHECK(check_genome(g, cfg, and_or_xor()).has_value());
    g = init_random_cgp(cfg, and_or_xor(), rng);
    g.node_genes[0] = 3;
    CHECK(check_genome(g, cfg, and_or_xor()).has_value());
    g = init_random_cgp(cfg, and_or_xor(), rng);
    g.output_genes[0] = 6;
    CHECK(check_genome(g, cfg, and_or_xor()).has_value());
}

TEST_CASE("config validation")
{
    CHECK_THROWS_AS(grid(2, 1, 4, 1, 5).validate(and_or_xor()), ConfigError);
    CHECK_THROWS_AS(grid(2, 0, 4, 1, 4).validate(and_or_xor()), ConfigError);
    CHECK_THROWS_AS(grid(2, 1, 4, 1, 4, 3).validate(and_or_xor()), ConfigError);
    CHECK_NOTHROW(grid(2, 1, 4, 1, 4).validate(and_or_xor()));
}

}

TEST_SUITE("cgp decoding") {

TEST_CASE("active set equals reachability and is minimal")
{
    const auto cfg = grid(3, 2, 6, 1, 6);
    Rng rng = derive_rng(5, 0);
    for (int i = 0; i < 500; ++i) {
        const auto g = init_random_cgp(cfg, and_or_xor(), rng);
        const auto active = decode_active(g, cfg, and_or_xor());
        const auto expected = reachable(g, cfg, and_or_xor());
        CHECK(std::is_sorted(active.begin(), active.end()));
        CHECK(std::set<std::size_t>(active.begin(), active.end()) == expected);
        // Each active node is needed: some output or active node reads it.
        for (const auto a : active) {
            bool read = std::find(g.output_genes.begin(), g.output_genes.end(), a) != g.output_genes.end();
            for (const auto b : active) {
                const std::size_t base = (b - cfg.n_inputs) * 3;
                for (std::size_t c = 0; c < 2; ++c) {
                    read = read || g.node_genes[base + 1 + c] == a;
                }
            }
            CHECK(read);
        }
    }
}

TEST_CASE("active evaluation matches the full-graph interpreter")
{
    Rng rng = derive_rng(6, 0);
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto cfg = grid(n, 2, 15, 1, 15);
        for (int i = 0; i < 100; ++i) {
            const auto g = init_random_cgp(cfg, and_or_xor(), rng);
            for (std::size_t row = 0; row < (std::size_t{1} << n); ++row) {
                const auto bits = oracle::row_bits(row, n);
                std::vector<double> in(bits.begin(), bits.end());
                const auto got = evaluate_cgp(g, cfg, and_or_xor(), in);
                const auto want = oracle::cgp_full_graph(g, cfg, and_or_xor(), bits);
                for (std::size_t o = 0; o < 2; ++o) {
                    REQUIRE((got[o] == 1.0) == want[o]);
                }
            }
        }
    }
}

TEST_CASE("mutating inactive genes is neutral")
{
    const auto cfg = grid(3, 1, 20, 1, 20);
    Rng rng = derive_rng(7, 0);
    for (int i = 0; i < 300; ++i) {
        const auto g = init_random_cgp(cfg, and_or_xor(), rng);
        const auto active = decode_active(g, cfg, and_or_xor());
        auto m = g;
        for (std::size_t n = 0; n < cfg.n_nodes(); ++n) {
            if (std::binary_search(active.begin(), active.end(), cfg.n_inputs + n)) {
                continue;
            }
            const std::size_t gene = n * 3 + rng.below(3);
            const auto range = gene_range(cfg, and_or_xor(), gene);
            set_gene(m, cfg, gene, range.value_at(static_cast<std::size_t>(rng.below(range.size()))));
        }
        for (std::size_t row = 0; row < 8; ++row) {
            const auto bits = oracle::row_bits(row, 3);
            std::vector<double> in(bits.begin(), bits.end());
            CHECK(evaluate_cgp(g, cfg, and_or_xor(), in) == evaluate_cgp(m, cfg, and_or_xor(), in));
        }
    }
}

TEST_CASE("deep graphs render as let-bindings")
{
    // A chain where every node reads the previous one twice doubles the
    // expanded size per column.
    const auto cfg = grid(1, 1, 30, 1, 30);
    CgpGenome g;
    for (std::size_t n = 0; n < 30; ++n) {
        g.node_genes.insert(g.node_genes.end(), {0, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n)});
    }
    g.output_genes = {30};
    const auto text = cgp_to_expression(g, cfg, and_or_xor());
    CHECK(text.rfind("let n1 = (and x0 x0), n2 = (and n1 n1)", 0) == 0);
    CHECK(text.size() < 2000);
    CHECK(text.substr(text.size() - 7) == " in n30");
}

TEST_CASE("model breeds by mutation only and decodes to an equivalent program")
{
    const CgpModel model(grid(3, 1, 10, 1, 10), and_or_xor());
    Rng rng = derive_rng(8, 0);
    const auto pop = model.initialize(10, rng);
    for (const auto& g : pop) {
        const auto program = model.decode(g);
        CHECK(program->n_inputs() == 3);
        const auto patterns = input_patterns(3);
        std::uint64_t out = 0;
        program->evaluate_packed(patterns, 1, std::span<std::uint64_t>(&out, 1));
        for (std::size_t row = 0; row < 8; ++row) {
            const auto bits = oracle::row_bits(row, 3);
            CHECK(((out >> row) & 1U) == (oracle::cgp_full_graph(g, model.config(), and_or_xor(), bits)[0] ? 1U : 0U));
        }
        const auto child = model.breed(g, pop.front(), {0.9, 0.0}, rng);
        CHECK(child == g);
    }
}

}
