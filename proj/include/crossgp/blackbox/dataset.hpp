#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crossgp {

/// Supervised regression data, stored row-major.
class Dataset {
public:
    Dataset(std::string name, std::size_t n_inputs, std::size_t n_outputs, std::vector<double> x,
            std::vector<double> y);

    const std::string& name() const noexcept { return name_; }
    std::size_t n_inputs() const noexcept { return n_inputs_; }
    std::size_t n_outputs() const noexcept { return n_outputs_; }
    std::size_t rows() const noexcept { return x_.size() / n_inputs_; }

    std::span<const double> x(std::size_t row) const { return {x_.data() + row * n_inputs_, n_inputs_}; }
    std::span<const double> y(std::size_t row) const { return {y_.data() + row * n_outputs_, n_outputs_}; }

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::string name_;
    std::size_t n_inputs_;
    std::size_t n_outputs_;
    std::vector<double> x_;
    std::vector<double> y_;
};

/// CSV with header `x0,...,x{n-1},y0,...,y{m-1}`. An optional leading
/// `# name: <name>` line sets the dataset name, otherwise `default_name` is used.
/// Throws ParseError with the offending line number.
Dataset load_dataset_csv(std::string_view text, std::string_view default_name = "dataset");

/// Shortest round-trip decimal rendering, so load(save(d)) == d.
std::string save_dataset_csv(const Dataset& d);

} // namespace crossgp
