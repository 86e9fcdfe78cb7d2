#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crossgp {

enum class Domain { Real, Boolean };

// Evaluators gather arguments into fixed-size buffers.
inline constexpr std::size_t max_supported_arity = 4;

std::string_view to_string(Domain domain) noexcept;

// Scalar semantics. Boolean values travel as 0.0 / 1.0.
using ScalarFn = double (*)(std::span<const double>);
// Bit-parallel semantics: 64 truth-table rows per word. Boolean domain only.
using PackedFn = std::uint64_t (*)(std::span<const std::uint64_t>);

struct Primitive {
    std::size_t id = 0;
    std::string name;
    std::size_t arity = 0;
    Domain domain = Domain::Real;
    ScalarFn scalar = nullptr;
    PackedFn packed = nullptr;
};

/// Ordered operator catalogue. Primitive ids equal their position.
class FunctionSet {
public:
    FunctionSet(Domain domain, std::vector<Primitive> primitives);

    /// Builds a set from registered primitive names, e.g. {"and", "or"}.
    static FunctionSet from_names(Domain domain, const std::vector<std::string>& names);

    /// {add, sub, mul, div}
    static FunctionSet default_real();
    /// {and, or, nand, nor}
    static FunctionSet default_boolean();
    static FunctionSet default_for(Domain domain);

    Domain domain() const noexcept { return domain_; }
    std::size_t size() const noexcept { return primitives_.size(); }
    std::size_t max_arity() const noexcept { return max_arity_; }
    const Primitive& operator[](std::size_t id) const { return primitives_[id]; }
    std::span<const Primitive> primitives() const noexcept { return primitives_; }

    /// Ids of primitives with arity >= 1 (usable as interior tree nodes).
    const std::vector<std::size_t>& functions() const noexcept { return functions_; }
    /// Ids of arity-0 primitives.
    const std::vector<std::size_t>& nullary() const noexcept { return nullary_; }

    std::vector<std::string> names() const;

private:
    Domain domain_;
    std::vector<Primitive> primitives_;
    std::vector<std::size_t> functions_;
    std::vector<std::size_t> nullary_;
    std::size_t max_arity_ = 0;
};

/// Names accepted by FunctionSet::from_names for the given domain.
std::vector<std::string> available_primitives(Domain domain);

namespace protected_ops {
inline constexpr double division_guard = 1e-9;
double div(double a, double b) noexcept;
double log(double a) noexcept;
double sqrt(double a) noexcept;
} // namespace protected_ops

} // namespace crossgp
