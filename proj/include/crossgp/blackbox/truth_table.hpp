#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crossgp {

/// Fully specified multi-output Boolean function.
///
/// Row r assigns input i the value (r >> i) & 1, i.e. input 0 is the least
/// significant bit. Each output is a 2^n-bit sequence packed into 64-bit
/// words (bit r % 64 of word r / 64); unused bits of the last word stay zero.
class TruthTable {
public:
    static constexpr std::size_t max_inputs = 20;

    /// All-zero table. Throws SizeLimitError above max_inputs.
    TruthTable(std::string name, std::size_t n_inputs, std::size_t n_outputs);

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    std::size_t n_inputs() const noexcept { return n_inputs_; }
    std::size_t n_outputs() const noexcept { return n_outputs_; }
    std::size_t rows() const noexcept { return std::size_t{1} << n_inputs_; }
    std::size_t words_per_output() const noexcept { return words_; }
    /// Valid-bit mask of the last word of each output.
    std::uint64_t last_word_mask() const noexcept;

    bool get(std::size_t row, std::size_t output) const;
    void set(std::size_t row, std::size_t output, bool value);

    std::span<const std::uint64_t> output_words(std::size_t output) const
    {
        return {bits_.data() + output * words_, words_};
    }

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    std::string name_;
    std::size_t n_inputs_;
    std::size_t n_outputs_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// Packed input columns for an n-input table: word w of input i at
/// [i * words + w], padding bits zero.
std::vector<std::uint64_t> input_patterns(std::size_t n_inputs);

/// Text format:
///
///     inputs N outputs M
///     <N input bits> <M output bits>      (2^N lines, any order)
///
/// Bits are '0'/'1' with index 0 rightmost in each group. Lines starting with
/// '#' are comments; a leading `# name: <name>` names the table.
TruthTable load_truth_table(std::string_view text, std::string_view default_name = "table");
std::string save_truth_table(const TruthTable& table);

} // namespace crossgp
