#pragma once

#include <string>

#include <json.hpp>

#include "fraclab/harness.hpp"

namespace fraclab {

// UTC, ISO 8601 to the second.
std::string utc_timestamp();

// report.to_json() plus the timestamp field.
nlohmann::json report_document(const ExperimentReport& report, const std::string& timestamp);

struct ReportPaths {
  std::string json;
  std::string csv;
};

// Writes <stem>.json and <stem>.csv side by side; a trailing ".json" on the stem is dropped.
ReportPaths write_report(const ExperimentReport& report, const std::string& stem);

// The document with its timestamp removed, for reproducibility comparisons.
nlohmann::json strip_timestamp(nlohmann::json document);

}  // namespace fraclab
