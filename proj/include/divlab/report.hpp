#pragma once

#include "divlab/suites.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace divlab {

struct LabeledValue {
  std::string label;
  double value = 0.0;  // extended real
};

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<LabeledValue> results;
  std::vector<SuiteOutcome> suite_outcomes;
  std::uint64_t seed = 0;
  double wall_time = 0.0;

  bool all_passed() const;
};

/// Extended reals go out as numbers or the strings "+inf" / "-inf".
nlohmann::json extended_to_json(double x);
double extended_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::json& j);

}  // namespace divlab
