#pragma once

#include <string>
#include <string_view>

#include "crossgp/harness/experiment.hpp"

namespace crossgp::harness {

Json report_to_json(const BenchmarkReport& report);
BenchmarkReport report_from_json(const Json& doc);

/// json: the full nested report, two-space indented.
/// csv: header `seed,best_cost,success,evaluations,wall_ms`, one row per run,
/// then a `# aggregate: ...` trailer line.
std::string write_report(const BenchmarkReport& report, ReportFormat format);
BenchmarkReport load_report_json(std::string_view text);

/// Copy with every wall-time field zeroed, for reproducibility comparisons.
BenchmarkReport without_wall_time(BenchmarkReport report);

} // namespace crossgp::harness
