#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossgp/harness/catalogue.hpp"

namespace crossgp::harness::detail {

/// Typed, strict access to a JSON object. Every key the caller asks for is
/// remembered; finish() rejects whatever else the object holds.
class FieldReader {
public:
    FieldReader(const Json& object, std::string path);

    bool has(const std::string& key);
    const Json* raw(const std::string& key);
    std::optional<std::uint64_t> get_uint(const std::string& key);
    std::optional<double> get_real(const std::string& key);
    std::optional<std::string> get_string(const std::string& key);
    std::optional<bool> get_bool(const std::string& key);
    std::optional<std::vector<std::string>> get_strings(const std::string& key);

    std::string field(const std::string& key) const;
    void finish() const;

private:
    const Json& object_;
    std::string path_;
    std::vector<std::string> known_;
};

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ");

} // namespace crossgp::harness::detail
