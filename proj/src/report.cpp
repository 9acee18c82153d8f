#include "divlab/report.hpp"

#include "divlab/errors.hpp"
#include "divlab/extended_real.hpp"

#include <charconv>

namespace divlab {

std::string format_extended(double x, int significant_digits) {
  if (std::isnan(x)) throw Error(ErrorKind::NumericalError, "NaN is not an extended real");
  if (is_plus_inf(x)) return "+inf";
  if (is_minus_inf(x)) return "-inf";
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  // to_chars ignores the global locale.
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, significant_digits);
  return std::string(buf, res.ptr);
}

double parse_extended(const std::string& text) {
  if (text == "+inf" || text == "inf" || text == "+infinity" || text == "infinity") return kInf;
  if (text == "-inf" || text == "-infinity") return -kInf;
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || std::isnan(value)) {
    throw Error(ErrorKind::InvalidInput, "not an extended real: '" + text + "'");
  }
  return value;
}

bool RunReport::all_passed() const {
  for (const auto& o : suite_outcomes) {
    if (!o.passed) return false;
  }
  return true;
}

nlohmann::json extended_to_json(double x) {
  if (std::isinf(x)) return format_extended(x);
  if (std::isnan(x)) throw Error(ErrorKind::NumericalError, "NaN is not an extended real");
  return x;
}

double extended_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_extended(j.get<std::string>());
  throw Error(ErrorKind::InvalidInput, "expected a number or an infinity sentinel");
}

nlohmann::json report_to_json(const RunReport& r) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& v : r.results) results.push_back({{"label", v.label}, {"value", extended_to_json(v.value)}});
  nlohmann::json outcomes = nlohmann::json::array();
  for (const auto& o : r.suite_outcomes) {
    outcomes.push_back({{"suite", o.suite},
                        {"property", o.property},
                        {"trials", o.trials},
                        {"max_violation", extended_to_json(o.max_violation)},
                        {"tolerance", o.tolerance},
                        {"passed", o.passed}});
  }
  return {{"command", r.command}, {"inputs", r.inputs},      {"results", results},
          {"suite_outcomes", outcomes}, {"seed", r.seed}, {"wall_time", r.wall_time}};
}

RunReport report_from_json(const nlohmann::json& j) {
  try {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    if (j.contains("inputs")) r.inputs = j.at("inputs");
    if (j.contains("results")) {
      for (const auto& v : j.at("results")) {
        r.results.push_back({v.at("label").get<std::string>(), extended_from_json(v.at("value"))});
      }
    }
    if (j.contains("suite_outcomes")) {
      for (const auto& o : j.at("suite_outcomes")) {
        SuiteOutcome s;
        s.suite = o.at("suite").get<std::string>();
        s.property = o.at("property").get<std::string>();
        s.trials = o.at("trials").get<int>();
        s.max_violation = extended_from_json(o.at("max_violation"));
        s.tolerance = o.at("tolerance").get<double>();
        s.passed = o.at("passed").get<bool>();
        r.suite_outcomes.push_back(std::move(s));
      }
    }
    if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("wall_time")) r.wall_time = j.at("wall_time").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed report: ") + e.what());
  }
}

}  // namespace divlab
