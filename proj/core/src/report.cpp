#include "gfbm/report.hpp"

#include <json.hpp>

#include "gfbm/io.hpp"

namespace gfbm {

void VerificationReport::add_detail(std::string key, std::string value) {
  details.emplace_back(std::move(key), std::move(value));
}

void VerificationReport::add_detail(std::string key, const char* value) {
  details.emplace_back(std::move(key), std::string(value));
}

void VerificationReport::add_detail(std::string key, double value) {
  details.emplace_back(std::move(key), format_double(value));
}

void VerificationReport::add_detail(std::string key, std::uint64_t value) {
  details.emplace_back(std::move(key), std::to_string(value));
}

void VerificationReport::add_detail(std::string key, std::int64_t value) {
  details.emplace_back(std::move(key), std::to_string(value));
}

void VerificationReport::add_detail(std::string key, bool value) {
  details.emplace_back(std::move(key), value ? "true" : "false");
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& report : reports) {
    nlohmann::ordered_json entry;
    entry["schema_version"] = "1";
    entry["name"] = report.name;
    entry["passed"] = report.passed;
    entry["statistic"] = report.statistic;
    entry["threshold"] = report.threshold;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.details) {
      details[key] = value;
    }
    entry["details"] = std::move(details);
    array.push_back(std::move(entry));
  }
  return array.dump(2) + "\n";
}

}  // namespace gfbm
