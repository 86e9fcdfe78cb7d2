#include "crossgp/blackbox/truth_table.hpp"

#include <string>

#include "crossgp/core/error.hpp"
#include "crossgp/core/text.hpp"

namespace crossgp {

TruthTable::TruthTable(std::string name, std::size_t n_inputs, std::size_t n_outputs)
    : name_(std::move(name))
    , n_inputs_(n_inputs)
    , n_outputs_(n_outputs)
{
    if (n_inputs_ > max_inputs) {
        throw SizeLimitError("truth table with " + std::to_string(n_inputs_) + " inputs exceeds the limit of " +
                             std::to_string(max_inputs));
    }
    if (n_inputs_ == 0 || n_outputs_ == 0) {
        throw ConfigError("truth table needs at least one input and one output");
    }
    words_ = (rows() + 63) / 64;
    bits_.assign(words_ * n_outputs_, 0);
}

std::uint64_t TruthTable::last_word_mask() const noexcept
{
    const std::size_t tail = rows() % 64;
    return tail == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
}

bool TruthTable::get(std::size_t row, std::size_t output) const
{
    return (bits_[output * words_ + row / 64] >> (row % 64)) & 1U;
}

void TruthTable::set(std::size_t row, std::size_t output, bool value)
{
    auto& word = bits_[output * words_ + row / 64];
    const std::uint64_t bit = std::uint64_t{1} << (row % 64);
    word = value ? (word | bit) : (word & ~bit);
}

std::vector<std::uint64_t> input_patterns(std::size_t n_inputs)
{
    if (n_inputs > TruthTable::max_inputs) {
        throw SizeLimitError("input patterns beyond " + std::to_string(TruthTable::max_inputs) + " inputs");
    }
    static constexpr std::uint64_t low_patterns[6] = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
    };
    const std::size_t rows = std::size_t{1} << n_inputs;
    const std::size_t words = (rows + 63) / 64;
    const std::uint64_t mask = rows % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;
    std::vector<std::uint64_t> out(n_inputs * words);
    for (std::size_t i = 0; i < n_inputs; ++i) {
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t word = 0;
            if (i < 6) {
                word = low_patterns[i];
            } else if ((w >> (i - 6)) & 1U) {
                word = ~std::uint64_t{0};
            }
            out[i * words + w] = w + 1 == words ? (word & mask) : word;
        }
    }
    return out;
}

namespace {

// Parses a bit group with index 0 rightmost.
std::optional<std::size_t> parse_bits(std::string_view s, std::size_t expected)
{
    if (s.size() != expected) {
        return std::nullopt;
    }
    std::size_t v = 0;
    for (const char c : s) {
        if (c != '0' && c != '1') {
            return std::nullopt;
        }
        v = (v << 1) | static_cast<std::size_t>(c == '1');
    }
    return v;
}

std::string format_bits(std::size_t value, std::size_t width)
{
    std::string out(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if ((value >> i) & 1U) {
            out[width - 1 - i] = '1';
        }
    }
    return out;
}

} // namespace

TruthTable load_truth_table(std::string_view content, std::string_view default_name)
{
    const auto lines = text::lines(content);
    std::string name(default_name);
    std::optional<TruthTable> table;
    std::vector<char> seen;
    std::size_t n_in = 0;
    std::size_t n_out = 0;
    std::size_t filled = 0;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto line = text::trim(lines[i]);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            constexpr std::string_view tag = "# name:";
            if (!table && line.substr(0, tag.size()) == tag) {
                name = std::string(text::trim(line.substr(tag.size())));
            }
            continue;
        }
        std::vector<std::string_view> fields;
        for (const auto f : text::split(line, ' ')) {
            if (!f.empty()) {
                fields.push_back(f);
            }
        }
        if (!table) {
            if (fields.size() != 4 || fields[0] != "inputs" || fields[2] != "outputs") {
                throw ParseError(line_no, "expected header 'inputs N outputs M'");
            }
            const auto ni = text::parse_uint(fields[1]);
            const auto no = text::parse_uint(fields[3]);
            if (!ni || !no) {
                throw ParseError(line_no, "header counts must be non-negative integers");
            }
            if (*ni > TruthTable::max_inputs) {
                throw SizeLimitError("line " + std::to_string(line_no) + ": " + std::to_string(*ni) +
                                     " inputs exceeds the limit of " + std::to_string(TruthTable::max_inputs));
            }
            if (*ni == 0 || *no == 0) {
                throw ParseError(line_no, "a table needs at least one input and one output");
            }
            n_in = static_cast<std::size_t>(*ni);
            n_out = static_cast<std::size_t>(*no);
            table.emplace(name, n_in, n_out);
            seen.assign(table->rows(), 0);
            continue;
        }
        if (fields.size() != 2) {
            throw ParseError(line_no, "expected '<input bits> <output bits>'");
        }
        const auto row = parse_bits(fields[0], n_in);
        if (!row) {
            throw ParseError(line_no, "input group must be exactly " + std::to_string(n_in) + " bits of 0/1");
        }
        const std::string_view outs = fields[1];
        if (outs.size() != n_out || outs.find_first_not_of("01") != std::string_view::npos) {
            throw ParseError(line_no, "output group must be exactly " + std::to_string(n_out) + " bits of 0/1");
        }
        if (seen[*row]) {
            throw ParseError(line_no, "duplicate row for inputs " + std::string(fields[0]));
        }
        seen[*row] = 1;
        ++filled;
        for (std::size_t o = 0; o < n_out; ++o) {
            table->set(*row, o, outs[n_out - 1 - o] == '1');
        }
    }
    if (!table) {
        throw ParseError(0, "missing header 'inputs N outputs M'");
    }
    if (filled != table->rows()) {
        for (std::size_t r = 0; r < table->rows(); ++r) {
            if (!seen[r]) {
                throw ParseError(lines.size(), "incomplete table: missing row for inputs " + format_bits(r, n_in) +
                                                   " (" + std::to_string(table->rows() - filled) + " rows missing)");
            }
        }
    }
    return std::move(*table);
}

std::string save_truth_table(const TruthTable& table)
{
    std::string out;
    if (!table.name().empty()) {
        out += "# name: " + table.name() + "\n";
    }
    out += "inputs " + std::to_string(table.n_inputs()) + " outputs " + std::to_string(table.n_outputs()) + "\n";
    for (std::size_t r = 0; r < table.rows(); ++r) {
        out += format_bits(r, table.n_inputs());
        out += ' ';
        for (std::size_t o = table.n_outputs(); o-- > 0;) {
            out += table.get(r, o) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

} // namespace crossgp
