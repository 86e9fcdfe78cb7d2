#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crossgp/core/primitives.hpp"
#include "crossgp/core/rng.hpp"

namespace crossgp::cgp {

struct CgpConfig {
    std::size_t n_inputs = 1;
    std::size_t n_outputs = 1;
    std::size_t n_columns = 100;
    std::size_t n_rows = 1;
    std::size_t levels_back = 100;
    // Connection genes per node; must equal the function set's max arity.
    std::size_t max_arity = 2;

    std::size_t n_nodes() const noexcept { return n_columns * n_rows; }
    std::size_t genes_per_node() const noexcept { return 1 + max_arity; }
    std::size_t genome_length() const noexcept { return n_nodes() * genes_per_node() + n_outputs; }
    std::size_t column_of(std::size_t node_index) const noexcept { return (node_index - n_inputs) / n_rows; }

    void validate(const FunctionSet& fset) const;
};

/// Node i (0-based over the grid, column-major) occupies
/// node_genes[i * genes_per_node() ...]: one function gene followed by
/// max_arity connection genes. Its graph address is n_inputs + i.
struct CgpGenome {
    std::vector<std::uint32_t> node_genes;
    std::vector<std::uint32_t> output_genes;

    friend bool operator==(const CgpGenome&, const CgpGenome&) = default;
};

/// Active graph addresses (>= n_inputs), ascending.
using ActiveSet = std::vector<std::size_t>;

/// Valid values of one gene: a contiguous "input" block [0, n_inputs) plus a
/// contiguous block of node addresses, or a single plain range.
struct GeneRange {
    std::size_t low_count = 0;   // values [0, low_count)
    std::size_t high_first = 0;  // then values [high_first, high_first + high_count)
    std::size_t high_count = 0;

    std::size_t size() const noexcept { return low_count + high_count; }
    std::uint32_t value_at(std::size_t k) const noexcept;
    std::optional<std::size_t> position_of(std::uint32_t value) const noexcept;
};

/// Range of the gene at flat position `gene` (node genes first, then outputs).
GeneRange gene_range(const CgpConfig& cfg, const FunctionSet& fset, std::size_t gene);

std::uint32_t get_gene(const CgpGenome& g, const CgpConfig& cfg, std::size_t gene);
void set_gene(CgpGenome& g, const CgpConfig& cfg, std::size_t gene, std::uint32_t value);

CgpGenome init_random_cgp(const CgpConfig& cfg, const FunctionSet& fset, Rng& rng);

/// Nodes reachable backward from the output genes, following only the
/// connection genes the node's function actually reads.
ActiveSet decode_active(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset);

std::vector<double> evaluate_cgp(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset,
                                 std::span<const double> inputs);

/// Forward pass over a precomputed active set.
void evaluate_active(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset, const ActiveSet& active,
                     std::span<const double> inputs, std::span<double> outputs);
/// Bit-parallel forward pass; layout as in Program::evaluate_packed.
void evaluate_active_packed(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset,
                            const ActiveSet& active, std::span<const std::uint64_t> inputs, std::size_t words,
                            std::span<std::uint64_t> outputs);

/// Each gene is resampled with probability `rate`, uniformly over its valid
/// values other than the current one (when at least two exist).
CgpGenome point_mutation(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset, double rate, Rng& rng);

/// Nested prefix expression per output, with shared subgraphs repeated.
/// Graphs whose expansion would reach max_expanded_expression nodes render as
/// "let n5 = (and x0 x1), n7 = (or n5 x2) in n7" over the active nodes.
inline constexpr std::size_t max_expanded_expression = 4096;
std::string cgp_to_expression(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset);

/// Validates gene ranges and the levels-back constraint.
std::optional<std::string> check_genome(const CgpGenome& g, const CgpConfig& cfg, const FunctionSet& fset);

} // namespace crossgp::cgp
