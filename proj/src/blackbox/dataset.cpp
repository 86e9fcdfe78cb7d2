#include "crossgp/blackbox/dataset.hpp"

#include <cmath>

#include "crossgp/core/error.hpp"
#include "crossgp/core/text.hpp"

namespace crossgp {

Dataset::Dataset(std::string name, std::size_t n_inputs, std::size_t n_outputs, std::vector<double> x,
                 std::vector<double> y)
    : name_(std::move(name))
    , n_inputs_(n_inputs)
    , n_outputs_(n_outputs)
    , x_(std::move(x))
    , y_(std::move(y))
{
    if (n_inputs_ == 0 || n_outputs_ == 0) {
        throw ConfigError("dataset needs at least one input and one output column");
    }
    if (x_.empty() || x_.size() % n_inputs_ != 0 || y_.size() != (x_.size() / n_inputs_) * n_outputs_) {
        throw ConfigError("dataset '" + name_ + "' has inconsistent dimensions");
    }
    for (const double v : x_) {
        if (!std::isfinite(v)) {
            throw ConfigError("dataset '" + name_ + "' contains a non-finite input");
        }
    }
    for (const double v : y_) {
        if (!std::isfinite(v)) {
            throw ConfigError("dataset '" + name_ + "' contains a non-finite target");
        }
    }
}

namespace {

// Column index of a header cell like "x3" / "y0", or npos.
std::size_t header_index(std::string_view cell, char prefix)
{
    if (cell.size() < 2 || cell.front() != prefix) {
        return std::string_view::npos;
    }
    const auto v = text::parse_uint(cell.substr(1));
    return v ? static_cast<std::size_t>(*v) : std::string_view::npos;
}

} // namespace

Dataset load_dataset_csv(std::string_view content, std::string_view default_name)
{
    const auto lines = text::lines(content);
    std::string name(default_name);
    std::size_t n_in = 0;
    std::size_t n_out = 0;
    bool have_header = false;
    std::vector<double> x;
    std::vector<double> y;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto line = text::trim(lines[i]);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            constexpr std::string_view tag = "# name:";
            if (!have_header && line.substr(0, tag.size()) == tag) {
                name = std::string(text::trim(line.substr(tag.size())));
            }
            continue;
        }
        const auto cells = text::split(line, ',');
        if (!have_header) {
            for (const auto raw : cells) {
                const auto cell = text::trim(raw);
                if (header_index(cell, 'x') == n_in && n_out == 0) {
                    ++n_in;
                } else if (header_index(cell, 'y') == n_out) {
                    ++n_out;
                } else {
                    throw ParseError(line_no, "bad header cell '" + std::string(cell) +
                                                  "' (expected x0..x{n-1} followed by y0..y{m-1})");
                }
            }
            if (n_in == 0 || n_out == 0) {
                throw ParseError(line_no, "header needs at least one x and one y column");
            }
            have_header = true;
            continue;
        }
        if (cells.size() != n_in + n_out) {
            throw ParseError(line_no, "expected " + std::to_string(n_in + n_out) + " values, found " +
                                          std::to_string(cells.size()));
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto v = text::parse_double(cells[c]);
            if (!v || !std::isfinite(*v)) {
                throw ParseError(line_no, "invalid number '" + std::string(text::trim(cells[c])) + "'");
            }
            (c < n_in ? x : y).push_back(*v);
        }
    }
    if (!have_header) {
        throw ParseError(0, "missing CSV header");
    }
    if (x.empty()) {
        throw ParseError(0, "dataset has no rows");
    }
    return Dataset(std::move(name), n_in, n_out, std::move(x), std::move(y));
}

std::string save_dataset_csv(const Dataset& d)
{
    std::string out;
    if (!d.name().empty()) {
        out += "# name: " + d.name() + "\n";
    }
    for (std::size_t i = 0; i < d.n_inputs(); ++i) {
        out += (i ? ",x" : "x") + std::to_string(i);
    }
    for (std::size_t j = 0; j < d.n_outputs(); ++j) {
        out += ",y" + std::to_string(j);
    }
    out += '\n';
    for (std::size_t r = 0; r < d.rows(); ++r) {
        bool first = true;
        for (const double v : d.x(r)) {
            out += (first ? "" : ",") + text::format_double(v);
            first = false;
        }
        for (const double v : d.y(r)) {
            out += "," + text::format_double(v);
        }
        out += '\n';
    }
    return out;
}

} // namespace crossgp
