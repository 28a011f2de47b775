#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gfbm {

// One checked property. `passed` is derived from statistic vs threshold by
// the check that produced the report; most checks pass when the statistic is
// below the threshold, witness-style checks when it is above. The details map
// records whatever is needed to reproduce the check (sample sizes, seeds,
// tolerances, worst cases); values are preformatted strings.
struct VerificationReport {
  std::string name;
  double statistic = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> details;

  void add_detail(std::string key, std::string value);
  void add_detail(std::string key, const char* value);
  void add_detail(std::string key, double value);
  void add_detail(std::string key, std::uint64_t value);
  void add_detail(std::string key, std::int64_t value);
  void add_detail(std::string key, bool value);
};

// JSON array of report objects; each object carries schema_version "1".
std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace gfbm
