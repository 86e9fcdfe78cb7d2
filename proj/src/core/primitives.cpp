#include "crossgp/core/primitives.hpp"

#include <algorithm>
#include <cmath>

#include "crossgp/core/error.hpp"

namespace crossgp {

std::string_view to_string(Domain domain) noexcept
{
    return domain == Domain::Real ? "real" : "boolean";
}

namespace protected_ops {

double div(double a, double b) noexcept
{
    return std::fabs(b) < division_guard ? 1.0 : a / b;
}

double log(double a) noexcept
{
    return a == 0.0 ? 0.0 : std::log(std::fabs(a));
}

double sqrt(double a) noexcept
{
    return std::sqrt(std::fabs(a));
}

} // namespace protected_ops

namespace {

using Args = std::span<const double>;
using Words = std::span<const std::uint64_t>;

constexpr double as_real(bool b) noexcept { return b ? 1.0 : 0.0; }
constexpr bool truthy(double v) noexcept { return v != 0.0; }

struct Entry {
    std::string_view name;
    std::size_t arity;
    ScalarFn scalar;
    PackedFn packed;
};

// clang-format off
const Entry real_entries[] = {
    {"add",  2, [](Args a) { return a[0] + a[1]; }, nullptr},
    {"sub",  2, [](Args a) { return a[0] - a[1]; }, nullptr},
    {"mul",  2, [](Args a) { return a[0] * a[1]; }, nullptr},
    {"div",  2, [](Args a) { return protected_ops::div(a[0], a[1]); }, nullptr},
    {"sin",  1, [](Args a) { return std::sin(a[0]); }, nullptr},
    {"cos",  1, [](Args a) { return std::cos(a[0]); }, nullptr},
    {"exp",  1, [](Args a) { return std::exp(a[0]); }, nullptr},
    {"log",  1, [](Args a) { return protected_ops::log(a[0]); }, nullptr},
    {"sqrt", 1, [](Args a) { return protected_ops::sqrt(a[0]); }, nullptr},
};

const Entry boolean_entries[] = {
    {"and",  2, [](Args a) { return as_real(truthy(a[0]) && truthy(a[1])); },  [](Words w) { return w[0] & w[1]; }},
    {"or",   2, [](Args a) { return as_real(truthy(a[0]) || truthy(a[1])); },  [](Words w) { return w[0] | w[1]; }},
    {"nand", 2, [](Args a) { return as_real(!(truthy(a[0]) && truthy(a[1]))); }, [](Words w) { return ~(w[0] & w[1]); }},
    {"nor",  2, [](Args a) { return as_real(!(truthy(a[0]) || truthy(a[1]))); }, [](Words w) { return ~(w[0] | w[1]); }},
    {"xor",  2, [](Args a) { return as_real(truthy(a[0]) != truthy(a[1])); },  [](Words w) { return w[0] ^ w[1]; }},
    {"xnor", 2, [](Args a) { return as_real(truthy(a[0]) == truthy(a[1])); },  [](Words w) { return ~(w[0] ^ w[1]); }},
    {"not",  1, [](Args a) { return as_real(!truthy(a[0])); },                 [](Words w) { return ~w[0]; }},
};
// clang-format on

std::span<const Entry> entries_for(Domain domain)
{
    if (domain == Domain::Real) {
        return real_entries;
    }
    return boolean_entries;
}

} // namespace

FunctionSet::FunctionSet(Domain domain, std::vector<Primitive> primitives)
    : domain_(domain)
    , primitives_(std::move(primitives))
{
    if (primitives_.empty()) {
        throw ConfigError("function set must not be empty");
    }
    for (std::size_t id = 0; id < primitives_.size(); ++id) {
        auto& p = primitives_[id];
        p.id = id;
        if (p.domain != domain_) {
            throw ConfigError("primitive '" + p.name + "' does not belong to the " + std::string(to_string(domain_)) +
                              " domain");
        }
        if (p.scalar == nullptr || (domain_ == Domain::Boolean && p.packed == nullptr)) {
            throw ConfigError("primitive '" + p.name + "' lacks semantics");
        }
        if (p.arity > max_supported_arity) {
            throw ConfigError("primitive '" + p.name + "' exceeds the supported arity");
        }
        max_arity_ = std::max(max_arity_, p.arity);
        (p.arity > 0 ? functions_ : nullary_).push_back(id);
    }
}

FunctionSet FunctionSet::from_names(Domain domain, const std::vector<std::string>& names)
{
    std::vector<Primitive> prims;
    for (const auto& name : names) {
        const auto entries = entries_for(domain);
        const auto it = std::find_if(entries.begin(), entries.end(), [&](const Entry& e) { return e.name == name; });
        if (it == entries.end()) {
            std::string valid;
            for (const auto& e : entries) {
                valid += (valid.empty() ? "" : ", ") + std::string(e.name);
            }
            throw ConfigError("unknown " + std::string(to_string(domain)) + " primitive '" + name + "' (valid: " +
                              valid + ")");
        }
        const bool duplicate = std::any_of(prims.begin(), prims.end(), [&](const Primitive& p) { return p.name == name; });
        if (duplicate) {
            throw ConfigError("primitive '" + name + "' listed twice");
        }
        prims.push_back({0, std::string(it->name), it->arity, domain, it->scalar, it->packed});
    }
    return FunctionSet(domain, std::move(prims));
}

FunctionSet FunctionSet::default_real()
{
    return from_names(Domain::Real, {"add", "sub", "mul", "div"});
}

FunctionSet FunctionSet::default_boolean()
{
    return from_names(Domain::Boolean, {"and", "or", "nand", "nor"});
}

FunctionSet FunctionSet::default_for(Domain domain)
{
    return domain == Domain::Real ? default_real() : default_boolean();
}

std::vector<std::string> FunctionSet::names() const
{
    std::vector<std::string> out;
    out.reserve(primitives_.size());
    for (const auto& p : primitives_) {
        out.push_back(p.name);
    }
    return out;
}

std::vector<std::string> available_primitives(Domain domain)
{
    std::vector<std::string> out;
    for (const auto& e : entries_for(domain)) {
        out.emplace_back(e.name);
    }
    return out;
}

} // namespace crossgp
