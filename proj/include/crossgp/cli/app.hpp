#pragma once

#include <ostream>

namespace crossgp::cli {

/// Entry point of the crossgp command line. Returns 0, 1 (run finished
/// without success) or 2 (usage, configuration or input error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace crossgp::cli
