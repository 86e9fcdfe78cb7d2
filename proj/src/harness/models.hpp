#pragma once

#include <memory>

#include "crossgp/cgp/model.hpp"
#include "crossgp/core/problem.hpp"
#include "crossgp/harness/config.hpp"
#include "crossgp/tgp/model.hpp"

namespace crossgp::harness::detail {

struct BuiltModel {
    std::unique_ptr<tgp::TgpModel> tgp;
    std::unique_ptr<cgp::CgpModel> cgp;
    // Every model parameter with defaults applied (no "name").
    Json params;
};

/// Reads model parameters (absent keys take defaults) for a problem's shape
/// and domain. Throws ConfigError naming the offending model.* field.
BuiltModel build_model(ModelKind kind, const Json& params, const Problem& problem);

} // namespace crossgp::harness::detail
