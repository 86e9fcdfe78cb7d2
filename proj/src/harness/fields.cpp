#include "fields.hpp"

#include <algorithm>
#include <cmath>

#include "crossgp/core/error.hpp"

namespace crossgp::harness::detail {

std::string join(const std::vector<std::string>& items, const std::string& sep)
{
    std::string out;
    for (const auto& item : items) {
        out += (out.empty() ? "" : sep) + item;
    }
    return out;
}

FieldReader::FieldReader(const Json& object, std::string path) : object_(object), path_(std::move(path))
{
    if (!object_.is_object()) {
        throw ConfigError(path_ + ": expected an object");
    }
}

std::string FieldReader::field(const std::string& key) const
{
    return path_.empty() ? key : path_ + "." + key;
}

bool FieldReader::has(const std::string& key)
{
    return raw(key) != nullptr;
}

const Json* FieldReader::raw(const std::string& key)
{
    if (std::find(known_.begin(), known_.end(), key) == known_.end()) {
        known_.push_back(key);
    }
    const auto it = object_.find(key);
    return it == object_.end() ? nullptr : &*it;
}

std::optional<std::uint64_t> FieldReader::get_uint(const std::string& key)
{
    const Json* v = raw(key);
    if (v == nullptr) {
        return std::nullopt;
    }
    if (v->is_number_unsigned()) {
        return v->get<std::uint64_t>();
    }
    if (v->is_number_integer() && v->get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(v->get<std::int64_t>());
    }
    if (v->is_number_float()) {
        const double d = v->get<double>();
        if (d >= 0.0 && d < 1.8e19 && std::floor(d) == d) {
            return static_cast<std::uint64_t>(d);
        }
    }
    throw ConfigError(field(key) + ": expected a non-negative integer, got " + v->dump());
}

std::optional<double> FieldReader::get_real(const std::string& key)
{
    const Json* v = raw(key);
    if (v == nullptr) {
        return std::nullopt;
    }
    if (!v->is_number()) {
        throw ConfigError(field(key) + ": expected a number, got " + v->dump());
    }
    return v->get<double>();
}

std::optional<std::string> FieldReader::get_string(const std::string& key)
{
    const Json* v = raw(key);
    if (v == nullptr) {
        return std::nullopt;
    }
    if (!v->is_string()) {
        throw ConfigError(field(key) + ": expected a string, got " + v->dump());
    }
    return v->get<std::string>();
}

std::optional<bool> FieldReader::get_bool(const std::string& key)
{
    const Json* v = raw(key);
    if (v == nullptr) {
        return std::nullopt;
    }
    if (!v->is_boolean()) {
        throw ConfigError(field(key) + ": expected true or false, got " + v->dump());
    }
    return v->get<bool>();
}

std::optional<std::vector<std::string>> FieldReader::get_strings(const std::string& key)
{
    const Json* v = raw(key);
    if (v == nullptr) {
        return std::nullopt;
    }
    if (!v->is_array() || !std::all_of(v->begin(), v->end(), [](const Json& e) { return e.is_string(); })) {
        throw ConfigError(field(key) + ": expected an array of strings, got " + v->dump());
    }
    return v->get<std::vector<std::string>>();
}

void FieldReader::finish() const
{
    for (const auto& [key, value] : object_.items()) {
        if (std::find(known_.begin(), known_.end(), key) == known_.end()) {
            throw ConfigError(field(key) + ": unknown key (valid: " + join(known_) + ")");
        }
    }
}

} // namespace crossgp::harness::detail
