#include "fraclab/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "fraclab/error.hpp"

namespace fraclab {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json report_document(const ExperimentReport& report, const std::string& timestamp) {
  nlohmann::json doc = report.to_json();
  doc["timestamp"] = timestamp;
  return doc;
}

ReportPaths write_report(const ExperimentReport& report, const std::string& stem) {
  std::string base = stem;
  if (base.size() > 5 && base.compare(base.size() - 5, 5, ".json") == 0) base.resize(base.size() - 5);
  ReportPaths paths{base + ".json", base + ".csv"};
  std::ofstream json(paths.json);
  if (!json) throw NotFound("cannot write report '" + paths.json + "'");
  json << report_document(report, utc_timestamp()).dump(2) << '\n';
  std::ofstream csv(paths.csv);
  if (!csv) throw NotFound("cannot write report '" + paths.csv + "'");
  csv << report.csv;
  return paths;
}

nlohmann::json strip_timestamp(nlohmann::json document) {
  document.erase("timestamp");
  return document;
}

}  // namespace fraclab
