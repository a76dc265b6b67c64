#pragma once

#include <string>

#include "stq/report.hpp"

namespace stq {
namespace cli {

// JSON report (schema-versioned) and CSV residual table with columns
// check,value,tolerance,pass.  The CSV is byte-deterministic for a fixed
// config and seed; wall time lives only in the JSON.
std::string report_json(const ResidualReport& rep, double wall_seconds);
std::string report_csv(const ResidualReport& rep);

// atomic write: temp file in the target directory, then rename
void write_atomic(const std::string& path, const std::string& content);

struct MergeSummary {
    int scenarios = 0;
    int failures = 0;
    std::string merged_json;
    std::string table;
};
MergeSummary merge_reports(const std::string& directory);

}  // namespace cli
}  // namespace stq
